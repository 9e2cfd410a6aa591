from django.urls import path
from . import views

app_name = 'scheduler'

urlpatterns = [
    # API Endpoints
    path('api/simulate/', views.simulate_view, name='api_simulate'),
    path('api/datasets/<str:dataset_id>/', views.dataset_view, name='api_dataset'),
    path('api/runs/', views.runs_view, name='api_runs'),

    # Charts
    path('runs/<uuid:run_id>/gantt.svg', views.run_gantt_view, name='run_gantt'),
]

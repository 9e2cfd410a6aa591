from django.contrib import admin
from .models import SimulationRun


@admin.register(SimulationRun)
class SimulationRunAdmin(admin.ModelAdmin):
    list_display = ('dataset', 'policy', 'avg_turnaround', 'avg_waiting', 'context_switches', 'makespan', 'created_at')
    list_filter = ('policy', 'created_at')
    search_fields = ('dataset', 'policy')
    ordering = ('-created_at',)
    readonly_fields = ('id', 'created_at', 'result')

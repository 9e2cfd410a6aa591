import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SimulationRun',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('dataset', models.CharField(blank=True, max_length=100)),
                ('policy', models.CharField(max_length=100)),
                ('avg_turnaround', models.DecimalField(decimal_places=2, max_digits=12)),
                ('avg_waiting', models.DecimalField(decimal_places=2, max_digits=12)),
                ('context_switches', models.PositiveIntegerField()),
                ('makespan', models.PositiveIntegerField()),
                ('process_count', models.PositiveIntegerField()),
                ('result', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'db_table': 'simulation_runs',
                'ordering': ['-created_at'],
                'indexes': [
                    models.Index(fields=['dataset', 'policy'], name='simulation_dataset_policy_idx'),
                    models.Index(fields=['-created_at'], name='simulation_created_idx'),
                ],
            },
        ),
    ]

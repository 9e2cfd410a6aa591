from django.db import models
import uuid

from .report import result_document
from .utils import format_rational


class SimulationRunManager(models.Manager):
    def create_from_result(self, result):
        aggregates = result.aggregates
        return self.create(
            dataset=result.dataset,
            policy=result.policy,
            avg_turnaround=format_rational(aggregates.avg_turnaround),
            avg_waiting=format_rational(aggregates.avg_waiting),
            context_switches=aggregates.ncs,
            makespan=aggregates.makespan,
            process_count=len(result.per_process),
            result=result_document(result),
        )


class SimulationRun(models.Model):
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    dataset = models.CharField(max_length=100, blank=True)
    policy = models.CharField(max_length=100)
    avg_turnaround = models.DecimalField(max_digits=12, decimal_places=2)
    avg_waiting = models.DecimalField(max_digits=12, decimal_places=2)
    context_switches = models.PositiveIntegerField()
    makespan = models.PositiveIntegerField()
    process_count = models.PositiveIntegerField()
    result = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    objects = SimulationRunManager()

    class Meta:
        db_table = 'simulation_runs'
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['dataset', 'policy'], name='simulation_dataset_policy_idx'),
            models.Index(fields=['-created_at'], name='simulation_created_idx'),
        ]

    def __str__(self):
        return f"{self.policy} on {self.dataset or 'custom'} - NCS {self.context_switches}"

    @property
    def gantt(self):
        return [(s['id'], s['start'], s['end']) for s in self.result.get('gantt', [])]


def store_run(result):
    """Persist a SimResult as a SimulationRun"""
    return SimulationRun.objects.create_from_result(result)

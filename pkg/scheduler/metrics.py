"""
Scheduling criteria
Per-process turnaround and waiting times, exact averages, the FCFS
analytic cross-check and percentage improvements
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .engine import EngineTrace, Schedule, context_switches, simulate
from .utils import to_fraction


class MetricsError(ValueError):
    """A metric is undefined for the given input"""


@dataclass(frozen=True)
class ProcMetrics:
    id: str
    arrival: int
    burst: int
    completion: int
    turnaround: int
    waiting: int


@dataclass(frozen=True)
class Aggregates:
    avg_turnaround: Fraction
    avg_waiting: Fraction
    ncs: int
    makespan: int
    mean_burst: Fraction


@dataclass(frozen=True)
class SimResult:
    schedule: Schedule
    per_process: Tuple[ProcMetrics, ...]
    aggregates: Aggregates
    policy: str = ''
    dataset: str = ''
    trace: Optional[EngineTrace] = None

    def metrics_for(self, process_id):
        for metrics in self.per_process:
            if metrics.id == process_id:
                return metrics
        raise KeyError(process_id)

    @property
    def waiting_times(self):
        return {m.id: m.waiting for m in self.per_process}


def compute_metrics(workload, schedule, policy='', dataset='', trace=None):
    """TAT = CT - AT and WT = TAT - BT per process, averaged exactly"""
    completion = schedule.completion
    per_process = []
    for p in workload:
        turnaround = completion[p.id] - p.arrival
        per_process.append(ProcMetrics(
            id=p.id,
            arrival=p.arrival,
            burst=p.burst,
            completion=completion[p.id],
            turnaround=turnaround,
            waiting=turnaround - p.burst,
        ))

    n = len(per_process)
    aggregates = Aggregates(
        avg_turnaround=Fraction(sum(m.turnaround for m in per_process), n),
        avg_waiting=Fraction(sum(m.waiting for m in per_process), n),
        ncs=context_switches(schedule),
        makespan=schedule.makespan,
        mean_burst=Fraction(workload.total_burst, n),
    )
    return SimResult(schedule, tuple(per_process), aggregates, policy, dataset, trace)


def run_simulation(workload, config, dataset='', engine='segment'):
    """Simulate and measure in one step"""
    schedule, trace = simulate(workload, config, engine=engine)
    return compute_metrics(workload, schedule, policy=config.label, dataset=dataset, trace=trace)


def fcfs_completion_analytic(workload, n):
    """Completion of the n-th process (1-based, dataset order) under saturated FCFS"""
    if any(p.arrival for p in workload):
        raise MetricsError('the FCFS completion formula assumes every arrival is 0')
    if not 1 <= n <= len(workload):
        raise MetricsError(f'process index must lie in 1..{len(workload)}, got {n}')
    return sum(p.burst for p in workload.processes[:n])


def improvement(base, candidate):
    """Percentage improvement of candidate over base: (base - candidate) / base * 100"""
    base = to_fraction(base)
    candidate = to_fraction(candidate)
    if base <= 0:
        raise MetricsError(f'improvement needs a positive baseline, got {base}')
    return (base - candidate) / base * 100


def column_means(values):
    """Arithmetic mean of the defined values, None when there are none"""
    defined = [to_fraction(v) for v in values if v is not None]
    if not defined:
        return None
    return sum(defined, Fraction(0)) / len(defined)

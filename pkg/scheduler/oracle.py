"""
Tick-level reference simulator.

Advances the clock one time unit at a time and asks the policy for a
decision whenever the CPU is free. Only the policy decisions are shared
with the segment engine; the loop itself is independent so that the two
can be compared schedule for schedule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .engine import GanttSegment, Schedule, SimulationError, check_schedule
from .policies import Dispatch, ProcView, make_policy_state


@dataclass
class TickState:
    remaining: Dict[str, int]
    clock: int = 0
    running: Optional[str] = None
    slice_left: int = 0
    segment_start: int = 0
    pending: Optional[Dispatch] = None
    unfinished: int = field(init=False)

    def __post_init__(self):
        self.unfinished = sum(1 for left in self.remaining.values() if left)


def _ready(workload, state, clairvoyant):
    return [
        ProcView(p.id, p.arrival, p.burst, state.remaining[p.id], position=position)
        for position, p in enumerate(workload)
        if state.remaining[p.id] and (clairvoyant or p.arrival <= state.clock)
    ]


def tick_simulate(workload, config):
    policy = make_policy_state(config)
    arrival = {p.id: p.arrival for p in workload}
    state = TickState(remaining={p.id: p.burst for p in workload})
    segments = []
    horizon = max(arrival.values()) + workload.total_burst

    while state.unfinished:
        if state.running is None:
            if state.pending is None:
                state.pending = policy.next_dispatch(state.clock, _ready(workload, state, config.clairvoyant))
            if state.pending is not None and arrival[state.pending.id] <= state.clock:
                state.running = state.pending.id
                state.slice_left = min(state.pending.max_run, state.remaining[state.running])
                state.segment_start = state.clock
                state.pending = None

        if state.running is not None:
            state.remaining[state.running] -= 1
            state.slice_left -= 1
        state.clock += 1
        if state.clock > horizon:
            raise SimulationError(f'policy {config.label} made no progress by t={state.clock}')

        if state.running is not None and state.slice_left == 0:
            segments.append(GanttSegment(state.running, state.segment_start, state.clock))
            if not state.remaining[state.running]:
                state.unfinished -= 1
            state.running = None

    schedule = Schedule(tuple(segments))
    check_schedule(workload, schedule)
    return schedule

"""
Scheduling Engine
Runs the dispatch loop that turns a workload and a policy into a schedule
One engine instance per simulation; nothing is shared between runs
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .policies import ProcView, make_policy_state

logger = logging.getLogger(__name__)

SEGMENT_ENGINE = 'segment'
TICK_ENGINE = 'tick'


class SimulationError(ValueError):
    """The dispatch loop reached an inconsistent state"""


@dataclass(frozen=True)
class GanttSegment:
    id: str
    start: int
    end: int

    def __post_init__(self):
        if self.end <= self.start:
            raise SimulationError(f'empty segment for {self.id}: {self.start}-{self.end}')

    @property
    def length(self):
        return self.end - self.start


@dataclass(frozen=True)
class Schedule:
    segments: Tuple[GanttSegment, ...]

    def __post_init__(self):
        object.__setattr__(self, 'segments', tuple(self.segments))
        for before, after in zip(self.segments, self.segments[1:]):
            if after.start < before.end:
                raise SimulationError(f'segments overlap: {before} and {after}')

    @property
    def completion(self) -> Dict[str, int]:
        """Completion time per process: the end of its last segment"""
        completion = {}
        for segment in self.segments:
            completion[segment.id] = segment.end
        return completion

    @property
    def makespan(self):
        return self.segments[-1].end if self.segments else 0

    @property
    def busy_time(self):
        return sum(s.length for s in self.segments)

    def segments_for(self, process_id):
        return [s for s in self.segments if s.id == process_id]


@dataclass(frozen=True)
class RoundLog:
    round_index: int
    quantum: Optional[int]
    started_at: int
    dispatches: Tuple[Tuple[str, int], ...]  # (id, remaining before the dispatch)

    @property
    def order(self):
        return tuple(process_id for process_id, _ in self.dispatches)

    @property
    def remaining(self):
        return dict(self.dispatches)


@dataclass(frozen=True)
class EngineTrace:
    rounds: Tuple[RoundLog, ...] = ()

    def round(self, round_index):
        for log in self.rounds:
            if log.round_index == round_index:
                return log
        raise KeyError(round_index)


def context_switches(schedule):
    """Dispatch boundaries counted fence-post: segments + 1"""
    return len(schedule.segments) + 1


def check_schedule(workload, schedule):
    """Raise SimulationError unless the schedule executes the workload exactly"""
    executed = {p.id: 0 for p in workload}
    for segment in schedule.segments:
        if segment.id not in executed:
            raise SimulationError(f'segment for unknown process {segment.id}')
        if segment.start < workload.get(segment.id).arrival:
            raise SimulationError(f'{segment.id} runs at {segment.start} before it arrives')
        executed[segment.id] += segment.length
    for process in workload:
        if executed[process.id] != process.burst:
            raise SimulationError(f'{process.id} ran {executed[process.id]} of {process.burst} time units')


class SchedulingEngine:
    """Segment-based dispatch loop: each dispatch becomes one Gantt segment"""

    def __init__(self, workload, config):
        self.workload = workload
        self.config = config
        self.policy = make_policy_state(config)
        self.remaining = {p.id: p.burst for p in workload}
        self.clock = 0
        self.segments = []
        self.rounds = []

    def visible_processes(self):
        """Unfinished processes the policy may see at the current clock"""
        clairvoyant = self.config.clairvoyant
        return [
            ProcView(p.id, p.arrival, p.burst, self.remaining[p.id], position=position)
            for position, p in enumerate(self.workload)
            if self.remaining[p.id] and (clairvoyant or p.arrival <= self.clock)
        ]

    def next_arrival(self):
        upcoming = [p.arrival for p in self.workload if self.remaining[p.id] and p.arrival > self.clock]
        if not upcoming:
            raise SimulationError(f'policy {self.config.label} stalled at t={self.clock} with work left')
        return min(upcoming)

    def record_round(self, dispatch):
        if not self.rounds or self.rounds[-1]['round_index'] != dispatch.round_index:
            self.rounds.append({
                'round_index': dispatch.round_index,
                'quantum': dispatch.quantum,
                'started_at': self.clock,
                'dispatches': [],
            })
        self.rounds[-1]['dispatches'].append((dispatch.id, self.remaining[dispatch.id]))

    def run(self):
        unfinished = len(self.workload)
        while unfinished:
            dispatch = self.policy.next_dispatch(self.clock, self.visible_processes())
            if dispatch is None:
                idle_until = self.next_arrival()
                logger.debug('cpu idle %d-%d', self.clock, idle_until)
                self.clock = idle_until
                continue

            self.record_round(dispatch)
            process = self.workload.get(dispatch.id)
            start = max(self.clock, process.arrival)
            run = min(dispatch.max_run, self.remaining[process.id])
            if run < 1:
                raise SimulationError(f'dispatch of {process.id} with nothing to run')
            self.segments.append(GanttSegment(process.id, start, start + run))
            self.remaining[process.id] -= run
            self.clock = start + run
            if not self.remaining[process.id]:
                unfinished -= 1

        schedule = Schedule(tuple(self.segments))
        check_schedule(self.workload, schedule)
        trace = EngineTrace(tuple(
            RoundLog(r['round_index'], r['quantum'], r['started_at'], tuple(r['dispatches']))
            for r in self.rounds
        ))
        return schedule, trace


def simulate(workload, config, engine=SEGMENT_ENGINE):
    """Simulate ``workload`` under ``config``; returns (Schedule, EngineTrace)"""
    if engine == TICK_ENGINE:
        from .oracle import tick_simulate
        return tick_simulate(workload, config), EngineTrace()
    if engine != SEGMENT_ENGINE:
        raise SimulationError(f'unknown engine {engine!r}')
    return SchedulingEngine(workload, config).run()

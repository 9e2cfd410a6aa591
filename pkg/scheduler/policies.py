"""
Scheduling policies
Dynamic quantum math (median quantum, ready-queue time, priority order,
threshold rule) and the per-simulation policy state the engine consults
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .utils import to_fraction

logger = logging.getLogger(__name__)

FCFS = 'fcfs'
SRR = 'srr'
DRQ = 'drq'
KINDS = (FCFS, SRR, DRQ)

OFFLINE = 'offline'
ONLINE = 'online'
DRQ_MODES = (OFFLINE, ONLINE)

FORMULA = 'formula'
MEASURED = 'measured'
TRQ_MODES = (FORMULA, MEASURED)

DEFAULT_THRESHOLD = Fraction(4, 100)


class PolicyError(ValueError):
    """Invalid policy selection or parameters"""


def parse_fraction(value):
    """Exact rational from '0.04', '1/25', '4%', int, Decimal or Fraction"""
    try:
        return to_fraction(value)
    except ValueError as e:
        raise PolicyError(str(e)) from None


@dataclass(frozen=True)
class PolicyConfig:
    kind: str
    fixed_quantum: Optional[int] = None
    threshold_fraction: Fraction = DEFAULT_THRESHOLD
    drq_mode: str = OFFLINE
    trq_mode: str = FORMULA

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PolicyError(f'unknown policy {self.kind!r}; expected one of {", ".join(KINDS)}')
        if self.kind == SRR:
            quantum = self.fixed_quantum
            if isinstance(quantum, bool) or not isinstance(quantum, int) or quantum < 1:
                raise PolicyError(f'srr requires a quantum of at least 1, got {quantum!r}')
        fraction = parse_fraction(self.threshold_fraction)
        if not 0 <= fraction < 1:
            raise PolicyError(f'threshold fraction must lie in [0, 1), got {fraction}')
        object.__setattr__(self, 'threshold_fraction', fraction)
        if self.drq_mode not in DRQ_MODES:
            raise PolicyError(f'unknown drq mode {self.drq_mode!r}; expected offline or online')
        if self.trq_mode not in TRQ_MODES:
            raise PolicyError(f'unknown trq mode {self.trq_mode!r}; expected formula or measured')

    @property
    def clairvoyant(self):
        """Offline drq plans rounds over every unfinished process, arrived or not"""
        return self.kind == DRQ and self.drq_mode == OFFLINE

    @property
    def label(self):
        if self.kind == FCFS:
            return FCFS
        if self.kind == SRR:
            return f'{SRR}:{self.fixed_quantum}'
        extras = []
        if self.trq_mode != FORMULA:
            extras.append(self.trq_mode)
        if self.threshold_fraction != DEFAULT_THRESHOLD:
            extras.append(f'threshold={self.threshold_fraction}')
        if self.drq_mode == OFFLINE and not extras:
            return DRQ
        return f'{DRQ}:' + ','.join([self.drq_mode] + extras)

    def __str__(self):
        return self.label


def parse_policy(text, quantum=None, threshold=None, drq_mode=None, trq_mode=None):
    """
    Parse ``fcfs``, ``srr:3``, ``srr`` (with quantum), ``drq``, ``drq:online``
    or ``drq:offline,measured,threshold=1/10``. Explicit keyword values fill
    in whatever the text leaves out.
    """
    kind, _, argument = str(text).strip().lower().partition(':')
    if kind == FCFS:
        if argument:
            raise PolicyError(f'fcfs takes no parameters, got {argument!r}')
        return PolicyConfig(FCFS)

    if kind == SRR:
        raw = argument or quantum
        if raw is None or raw == '':
            raise PolicyError('srr requires a quantum, e.g. srr:3')
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise PolicyError(f'srr quantum must be an integer, got {raw!r}') from None
        return PolicyConfig(SRR, fixed_quantum=value)

    if kind == DRQ:
        options = {
            'drq_mode': drq_mode or OFFLINE,
            'trq_mode': trq_mode or FORMULA,
            'threshold_fraction': DEFAULT_THRESHOLD if threshold is None else parse_fraction(threshold),
        }
        for token in filter(None, (t.strip() for t in argument.split(','))):
            if token in DRQ_MODES:
                options['drq_mode'] = token
            elif token in TRQ_MODES:
                options['trq_mode'] = token
            elif token.startswith('threshold='):
                options['threshold_fraction'] = parse_fraction(token.split('=', 1)[1])
            else:
                raise PolicyError(f'unknown drq option {token!r}')
        return PolicyConfig(DRQ, **options)

    raise PolicyError(f'unknown policy {text!r}; expected fcfs, srr:<quantum> or drq')


@dataclass(frozen=True)
class ProcView:
    """What a policy sees of one live process"""
    id: str
    arrival: int
    original_burst: int
    remaining: int
    trq: int = 0
    position: int = 0


@dataclass(frozen=True)
class RoundPlan:
    round_index: int
    quantum: int
    order: Tuple[str, ...]


@dataclass(frozen=True)
class Dispatch:
    id: str
    max_run: int
    round_index: int = 1
    quantum: Optional[int] = None


# ===================== DYNAMIC QUANTUM MATH =====================

def median_quantum(remaining_bursts):
    """
    Quantum for a round: the element at index n // 2 of the sorted bursts.
    That is the middle element for odd n and the upper median for even n.
    """
    values = sorted(remaining_bursts)
    if not values:
        raise PolicyError('median quantum of an empty ready queue')
    return values[len(values) // 2]


def remaining_after_round(remaining, quantum):
    return max(remaining - quantum, 0)


def trq_update(trq_prev, quantum, k):
    """Ready-queue time after a round of ``k`` processes sharing ``quantum``"""
    if k < 1:
        raise PolicyError(f'a round holds at least one process, got k={k}')
    return trq_prev + quantum * (k - 1)


def threshold_qualifies(remaining, original_burst, fraction=DEFAULT_THRESHOLD):
    # exact: 1 <= 7 * 4/100 is False, no rounding of the threshold
    return remaining <= parse_fraction(fraction) * original_burst


def round_order(round_index, procs: Sequence[ProcView], threshold_fraction=DEFAULT_THRESHOLD):
    """
    Dispatch order for one round.

    Processes on the verge of completion (threshold rule) go first by
    arrival. The rest follow by ascending arrival in round 1 and by
    ascending (trq - arrival) afterwards. Ties fall back to arrival, then id.
    """
    fraction = parse_fraction(threshold_fraction)
    advanced = []
    rest = []
    for p in procs:
        if threshold_qualifies(p.remaining, p.original_burst, fraction):
            advanced.append(p)
        else:
            rest.append(p)

    advanced.sort(key=lambda p: (p.arrival, p.id))
    if round_index == 1:
        rest.sort(key=lambda p: (p.arrival, p.id))
    else:
        rest.sort(key=lambda p: (p.trq - p.arrival, p.arrival, p.id))
    return tuple(p.id for p in advanced + rest)


# ===================== POLICY STATE =====================

class FcfsPolicy:
    """Earliest arrival runs to completion; ties keep dataset order"""

    def __init__(self, config):
        self.config = config

    def next_dispatch(self, clock, ready):
        if not ready:
            return None
        head = min(ready, key=lambda p: (p.arrival, p.position))
        return Dispatch(head.id, head.remaining)


class RoundRobinPolicy:
    """
    Fixed-quantum round robin with round-based rotation.

    Within a round, the earliest-arrived process not yet served runs next;
    processes arriving mid-round join the current round. A new round opens
    once every arrived, unfinished process has been served.
    """

    def __init__(self, config):
        self.config = config
        self.quantum = config.fixed_quantum
        self.round_index = 0
        self.served = set()

    def next_dispatch(self, clock, ready):
        if not ready:
            return None
        waiting = [p for p in ready if p.id not in self.served]
        if not waiting or self.round_index == 0:
            self.round_index += 1
            self.served = set()
            waiting = list(ready)
        head = min(waiting, key=lambda p: (p.arrival, p.position))
        self.served.add(head.id)
        return Dispatch(head.id, self.quantum, self.round_index, self.quantum)


class DynamicQuantumPolicy:
    """
    Median-quantum round robin with ready-queue priority.

    Each round recomputes the quantum as the median of the current
    remaining bursts and orders its members with round_order. A slice that
    would leave a residue within the threshold is extended to completion.
    """

    def __init__(self, config):
        self.config = config
        self.round_index = 0
        self.plan = None
        self.queue = deque()
        self.trq = {}

    def next_dispatch(self, clock, ready):
        if not self.queue:
            self._close_round()
            if not ready:
                return None
            self._open_round(clock, ready)

        process_id = self.queue.popleft()
        view = next(p for p in ready if p.id == process_id)
        return Dispatch(process_id, self._slice(view), self.round_index, self.plan.quantum)

    def ready_time(self, view, clock):
        if self.config.trq_mode == MEASURED:
            consumed = view.original_burst - view.remaining
            return max(0, clock - view.arrival - consumed)
        return self.trq.get(view.id, 0)

    def _open_round(self, clock, ready):
        self.round_index += 1
        views = [replace(p, trq=self.ready_time(p, clock)) for p in ready]
        quantum = median_quantum(p.remaining for p in views)
        order = round_order(self.round_index, views, self.config.threshold_fraction)
        self.plan = RoundPlan(self.round_index, quantum, order)
        self.queue = deque(order)
        logger.debug('round %d at t=%d: quantum %d, order %s', self.round_index, clock, quantum, ','.join(order))

    def _close_round(self):
        if self.plan is None:
            return
        k = len(self.plan.order)
        for process_id in self.plan.order:
            self.trq[process_id] = trq_update(self.trq.get(process_id, 0), self.plan.quantum, k)
        self.plan = None

    def _slice(self, view):
        quantum = self.plan.quantum
        if view.remaining > quantum:
            residue = remaining_after_round(view.remaining, quantum)
            if threshold_qualifies(residue, view.original_burst, self.config.threshold_fraction):
                return view.remaining
        return quantum


POLICY_CLASSES = {
    FCFS: FcfsPolicy,
    SRR: RoundRobinPolicy,
    DRQ: DynamicQuantumPolicy,
}


def make_policy_state(config):
    return POLICY_CLASSES[config.kind](config)


def next_dispatch(policy_state, clock, ready):
    """(id, max_run) of the next dispatch, or None when nothing is dispatchable"""
    return policy_state.next_dispatch(clock, ready)

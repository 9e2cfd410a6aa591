"""
Process datasets
Defines, validates, parses, generates and bundles the simulator input
"""

from __future__ import annotations

import csv
import io
import json
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Tuple

HEADER = ('id', 'arrival', 'burst')
DEFAULT_BURST_MAX = 50

_INTEGER = re.compile(r'^[+-]?\d+$')


class WorkloadError(ValueError):
    """Invalid workload content, located by row and field when known"""

    def __init__(self, message, row=None, field=None):
        self.row = row
        self.field = field
        location = []
        if row is not None:
            location.append(f'row {row}')
        if field is not None:
            location.append(f'field {field!r}')
        if location:
            message = f"{', '.join(location)}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ProcessSpec:
    id: str
    arrival: int
    burst: int

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise WorkloadError('process id must be a non-empty string', field='id')
        if self.id != self.id.strip():
            raise WorkloadError(f'process id {self.id!r} has surrounding whitespace', field='id')
        if isinstance(self.arrival, bool) or not isinstance(self.arrival, int) or self.arrival < 0:
            raise WorkloadError(f'arrival must be a non-negative integer, got {self.arrival!r}', field='arrival')
        if isinstance(self.burst, bool) or not isinstance(self.burst, int) or self.burst < 1:
            raise WorkloadError(f'burst must be a positive integer, got {self.burst!r}', field='burst')


@dataclass(frozen=True)
class Workload:
    processes: Tuple[ProcessSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, 'processes', tuple(self.processes))
        if not self.processes:
            raise WorkloadError('workload is empty')
        seen = set()
        for row, process in enumerate(self.processes, start=1):
            if process.id in seen:
                raise WorkloadError(f'duplicate process id {process.id!r}', row=row, field='id')
            seen.add(process.id)

    def __len__(self):
        return len(self.processes)

    def __iter__(self):
        return iter(self.processes)

    def get(self, process_id):
        for process in self.processes:
            if process.id == process_id:
                return process
        raise KeyError(process_id)

    @property
    def total_burst(self):
        return sum(p.burst for p in self.processes)


# ===================== PARSING =====================

def _parse_int(text, row, field):
    value = text.strip() if isinstance(text, str) else text
    if isinstance(value, str):
        if not _INTEGER.match(value):
            raise WorkloadError(f'expected an integer, got {text!r}', row=row, field=field)
        value = int(value)
    elif isinstance(value, bool) or not isinstance(value, int):
        raise WorkloadError(f'expected an integer, got {text!r}', row=row, field=field)
    if value < 0:
        raise WorkloadError(f'must not be negative, got {value}', row=row, field=field)
    return value


def _build_process(row, process_id, arrival, burst):
    if not isinstance(process_id, str) or not process_id.strip():
        raise WorkloadError('process id must be a non-empty string', row=row, field='id')
    arrival = _parse_int(arrival, row, 'arrival')
    burst = _parse_int(burst, row, 'burst')
    if burst == 0:
        raise WorkloadError('burst must be at least 1', row=row, field='burst')
    return ProcessSpec(process_id.strip(), arrival, burst)


def _finish(processes):
    if not processes:
        raise WorkloadError('workload is empty')
    seen = set()
    for row, process in processes:
        if process.id in seen:
            raise WorkloadError(f'duplicate process id {process.id!r}', row=row, field='id')
        seen.add(process.id)
    return Workload(tuple(process for _, process in processes))


def _parse_csv(text):
    processes = []
    reader = csv.reader(io.StringIO(text.lstrip('\ufeff'), newline=''))
    for row, fields in enumerate(reader, start=1):
        if not fields or all(not f.strip() for f in fields):
            continue
        if row == 1 and tuple(f.strip().lower() for f in fields) == HEADER:
            continue
        if len(fields) != 3:
            raise WorkloadError(f'expected 3 fields (id,arrival,burst), got {len(fields)}', row=row)
        processes.append((row, _build_process(row, *fields)))
    return _finish(processes)


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkloadError(f'invalid JSON: {e.msg}', row=e.lineno) from e
    if not isinstance(data, list):
        raise WorkloadError('expected a JSON array of process objects')
    processes = []
    for row, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise WorkloadError('expected an object with id, arrival and burst', row=row)
        for field in HEADER:
            if field not in item:
                raise WorkloadError('missing key', row=row, field=field)
        processes.append((row, _build_process(row, item['id'], item['arrival'], item['burst'])))
    return _finish(processes)


def parse_workload(text, format='csv'):
    """Parse CSV or JSON text into a Workload, keeping file order"""
    if format == 'csv':
        return _parse_csv(text)
    if format == 'json':
        return _parse_json(text)
    raise WorkloadError(f'unknown workload format {format!r}')


def workload_to_csv(workload):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(HEADER)
    for p in workload:
        writer.writerow([p.id, p.arrival, p.burst])
    return buffer.getvalue()


def workload_to_json(workload):
    return json.dumps(as_rows(workload), indent=2) + '\n'


def serialize_workload(workload, format='csv'):
    if format == 'json':
        return workload_to_json(workload)
    if format == 'csv':
        return workload_to_csv(workload)
    raise WorkloadError(f'unknown workload format {format!r}')


# ===================== GENERATION =====================

def generate_workload(count, seed, arrival_max=None, burst_max=DEFAULT_BURST_MAX):
    """
    Generate a reproducible random workload.

    Uses Python's Mersenne Twister (random.Random) seeded with ``seed``.
    Each process draws its arrival from [0, arrival_max] and then its burst
    from [1, burst_max]. ``arrival_max`` defaults to 2 * count.
    """
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise WorkloadError(f'count must be at least 1, got {count!r}', field='count')
    if arrival_max is None:
        arrival_max = 2 * count
    if arrival_max < 0:
        raise WorkloadError(f'arrival_max must not be negative, got {arrival_max}', field='arrival_max')
    if burst_max < 1:
        raise WorkloadError(f'burst_max must be at least 1, got {burst_max}', field='burst_max')

    rng = random.Random(seed)
    processes = []
    for index in range(1, count + 1):
        arrival = rng.randint(0, arrival_max)
        burst = rng.randint(1, burst_max)
        processes.append(ProcessSpec(f'P{index}', arrival, burst))
    return Workload(tuple(processes))


# ===================== BUNDLED DATASETS =====================

TABLE1 = Workload((
    ProcessSpec('P1', 5, 5),
    ProcessSpec('P2', 4, 6),
    ProcessSpec('P3', 3, 7),
    ProcessSpec('P4', 1, 9),
    ProcessSpec('P5', 2, 2),
    ProcessSpec('P6', 6, 3),
))

# Process counts of the ten evaluation datasets. Only dataset 5 (the
# illustration) has published values; the rest are seeded stand-ins.
DATASET_SIZES = {
    'ds1': 4,
    'ds2': 5,
    'ds3': 5,
    'ds4': 6,
    'ds5': 6,
    'ds6': 10,
    'ds7': 10,
    'ds8': 15,
    'ds9': 15,
    'ds10': 20,
}

DATASET_IDS = tuple(DATASET_SIZES) + ('table1',)


def bundled_dataset(dataset_id):
    """Return a bundled dataset: table1 or ds1..ds10"""
    if not isinstance(dataset_id, str):
        raise WorkloadError(f'dataset id must be a string, got {dataset_id!r}', field='dataset')
    if dataset_id in ('table1', 'ds5'):
        return TABLE1
    if dataset_id not in DATASET_SIZES:
        raise WorkloadError(f'unknown dataset {dataset_id!r}; expected one of {", ".join(DATASET_IDS)}')
    number = int(dataset_id[2:])
    return generate_workload(DATASET_SIZES[dataset_id], seed=number)


def expand_dataset_ids(text):
    """Expand a comma list such as ``table1,ds1..ds3`` into dataset ids"""
    ids = []
    for part in (p.strip() for p in text.split(',')):
        if not part:
            continue
        match = re.match(r'^ds(\d+)\.\.ds(\d+)$', part)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise WorkloadError(f'empty dataset range {part!r}')
            ids.extend(f'ds{n}' for n in range(low, high + 1))
        else:
            ids.append(part)
    if not ids:
        raise WorkloadError('no datasets given')
    return ids


def load_workload(source):
    """
    Resolve a bundled id or a file path into (label, Workload).
    File errors surface as OSError; content errors as WorkloadError.
    """
    if source in DATASET_IDS:
        return source, bundled_dataset(source)
    path = Path(source)
    text = path.read_text(encoding='utf-8')
    return path.stem, parse_workload(text, format_for_path(source))


def format_for_path(path: Optional[str], default='csv'):
    if path and Path(path).suffix.lower() == '.json':
        return 'json'
    return default


def as_rows(workload: Iterable[ProcessSpec]):
    return [{'id': p.id, 'arrival': p.arrival, 'burst': p.burst} for p in workload]

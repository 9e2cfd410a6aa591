import random

from scheduler.policies import DRQ, FCFS, OFFLINE, ONLINE, SRR, PolicyConfig
from scheduler.workload import generate_workload

SRR3 = PolicyConfig(SRR, fixed_quantum=3)
DRQ_OFFLINE = PolicyConfig(DRQ, drq_mode=OFFLINE)
DRQ_ONLINE = PolicyConfig(DRQ, drq_mode=ONLINE)

ALL_POLICIES = (
    [PolicyConfig(FCFS)]
    + [PolicyConfig(SRR, fixed_quantum=q) for q in range(1, 9)]
    + [DRQ_OFFLINE, DRQ_ONLINE]
)


def random_workloads(count, seed=2024, max_processes=20, arrival_max=100, burst_max=50):
    """Seeded stream of workloads with n in [1, max_processes]"""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_processes)
        yield generate_workload(n, rng.getrandbits(64), arrival_max=arrival_max, burst_max=burst_max)

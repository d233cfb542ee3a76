"""Order-preserving map over independent jobs, capped by HP0_THREADS."""

from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from hp0.config import HP0_THREADS

R = TypeVar("R")

_in_worker = False


def _mark_worker() -> None:
    global _in_worker
    _in_worker = True


def in_worker() -> bool:
    return _in_worker


def pmap(fn: Callable[..., R], jobs: Iterable[tuple], workers: int | None = None) -> list[R]:
    """Apply ``fn(*job)`` to every job, returning results in job order.

    Runs inline when the cap is 1 (the default), there is at most one job, or
    the caller is itself a pool worker: pools never nest, so at most
    HP0_THREADS processes run besides the parent.
    """
    jobs = list(jobs)
    workers = HP0_THREADS if workers is None else workers
    if workers <= 1 or len(jobs) <= 1 or _in_worker:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs)), initializer=_mark_worker) as pool:
        return list(pool.map(fn, *zip(*jobs)))

import pytest

from hp0 import parallel
from hp0.matroid import GaleFrame
from hp0.module import Quotient, hp0_hilbert, invariant_bracket_oracle, invariant_monomials, relation_spans
from hp0.parallel import in_worker, pmap
from hp0.sheaf import SheafModel

from .conftest import PATH, TRI


def _nested(x: int) -> tuple[bool, list[int]]:
    return in_worker(), pmap(pow, [(x, 2), (x, 3)], workers=2)


def _clear_caches() -> None:
    relation_spans.cache_clear()
    invariant_monomials.cache_clear()


def test_pmap_keeps_job_order():
    jobs = [(i, 2) for i in range(6)]
    assert pmap(pow, jobs, workers=2) == [i * i for i in range(6)]
    assert pmap(pow, jobs, workers=1) == [i * i for i in range(6)]
    assert pmap(pow, [], workers=2) == []


def test_workers_run_nested_maps_inline():
    assert not in_worker()
    assert pmap(_nested, [(2,), (3,)], workers=2) == [(True, [4, 8]), (True, [9, 27])]


@pytest.mark.parametrize("rows", [TRI, PATH])
def test_results_do_not_depend_on_worker_count(rows, monkeypatch):
    frame = GaleFrame.from_rows(rows)

    _clear_caches()
    inline = (
        hp0_hilbert(frame, 5),
        SheafModel(frame, Quotient.J, 4).stalks,
        invariant_bracket_oracle(frame, 3),
    )

    _clear_caches()
    monkeypatch.setattr(parallel, "HP0_THREADS", 2)
    pooled = (
        hp0_hilbert(frame, 5),
        SheafModel(frame, Quotient.J, 4).stalks,
        invariant_bracket_oracle(frame, 3),
    )
    _clear_caches()

    assert pooled == inline

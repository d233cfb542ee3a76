import random

import pytest

from hp0.bc import (
    bc_faces,
    broken_circuits,
    dual_top_h_check,
    fh_vectors,
    h_vector,
    ih_betti_report,
    independence_complex,
    sr_quotient_dims,
    sr_span,
)
from hp0.matroid import GaleFrame
from hp0.poly import trim

DOUBLED = [[1, 0, 1, 0], [0, 1, 0, 1]]


def test_tri_complex(tri):
    assert broken_circuits(tri) == (frozenset({0, 1}),)
    cx = bc_faces(tri)
    assert {0, 1} not in cx
    assert {0, 2} in cx
    assert cx.facets == (frozenset({0, 2}), frozenset({1, 2}))
    fh = fh_vectors(cx, tri.k)
    assert fh.f == (1, 3, 2)
    assert fh.h == (1, 1, 0)


def test_u13_h_vector(u13):
    assert h_vector(u13) == (1, 0)


def test_identity_h_vector():
    assert trim(h_vector(GaleFrame.identity(3))) == (1,)


def test_void_complex(looped):
    cx = bc_faces(looped)
    assert cx.void
    assert fh_vectors(cx, looped.k).h == ()
    assert sr_quotient_dims(looped, 3).dims == (0, 0, 0, 0)


def test_fh_vectors_rejects_small_rank(tri):
    with pytest.raises(ValueError):
        fh_vectors(bc_faces(tri), 1)


def test_bc_complex_is_independent(corpus_frame):
    independent = independence_complex(corpus_frame)
    assert bc_faces(corpus_frame).faces <= independent.faces


def test_sr_quotient_matches_expansion(tri):
    assert sr_quotient_dims(tri, 4).dims == (1, 3, 5, 7, 9)
    assert sr_span(tri, 2).leading == {(1, 1, 0)}


def test_dual_top_h(corpus_frame):
    check = dual_top_h_check(corpus_frame)
    assert check.ok, (check.bc_sum, check.dual_top)


def test_dual_top_h_random(random_frames):
    assert all(dual_top_h_check(frame).ok for frame in random_frames)


def test_h_vector_ignores_ordering_but_faces_do_not():
    frame = GaleFrame.from_rows(DOUBLED)
    reordered = frame.permuted([0, 2, 1, 3])
    assert h_vector(reordered) == h_vector(frame)
    assert bc_faces(reordered).faces != bc_faces(frame).faces


def test_h_vector_random_permutations(random_frames):
    rng = random.Random(5)
    for frame in random_frames:
        order = list(range(frame.n))
        rng.shuffle(order)
        assert h_vector(frame.permuted(order)) == h_vector(frame)


def test_ih_betti(tri):
    report = ih_betti_report(tri, 3)
    assert report.betti() == {0: 1, 2: 1}
    assert report.betti(paper_degrees=False) == {0: 1, 1: 1}
    assert report.equivariant(paper_degrees=False) == {0: 1, 1: 3, 2: 5, 3: 7}

import pytest

from hp0.matroid import GaleFrame, dual_frame, flats, kernel_basis, kirwan_degree2_lines, signed_circuits

from .conftest import TRI


def _apply(frame: GaleFrame, vec) -> list[int]:
    return [sum(r * v for r, v in zip(row, vec)) for row in frame.rows]


def test_tri_circuit(tri):
    assert [c.coeffs for c in signed_circuits(tri)] == [(1, 1, -1)]


def test_u13_circuits(u13):
    found = signed_circuits(u13)
    assert [c.coeffs for c in found] == [(1, -1, 0), (1, 0, -1), (0, 1, -1)]
    assert [c.ordered_support for c in found] == [(0, 1), (0, 2), (1, 2)]


def test_identity_has_no_circuits():
    assert signed_circuits(GaleFrame.identity(3)) == ()
    assert kernel_basis(GaleFrame.identity(3)) == ()


def test_loops_are_circuits(looped):
    assert (0, 0, 1) in [c.coeffs for c in signed_circuits(looped)]


def test_circuit_invariants(corpus_frame):
    for c in signed_circuits(corpus_frame):
        assert set(c.coeffs) <= {-1, 0, 1}
        assert c.coeffs[c.ordered_support[0]] == 1
        assert not any(_apply(corpus_frame, c.coeffs))
    supports = [c.support for c in signed_circuits(corpus_frame)]
    assert not any(a < b for a in supports for b in supports)


def test_kernel_basis_spans_kernel(corpus_frame):
    basis = kernel_basis(corpus_frame)
    assert len(basis) == corpus_frame.n - corpus_frame.k
    for row in basis:
        assert not any(_apply(corpus_frame, row))


def test_random_frames_have_unit_circuits(random_frames):
    for frame in random_frames:
        for c in signed_circuits(frame):
            assert set(c.coeffs) <= {-1, 0, 1}


def test_dual_frame_rank(tri):
    dual = dual_frame(tri)
    assert (dual.k, dual.n) == (1, 3)
    assert not any(_apply(tri, dual.rows[0]))


def test_dual_is_an_involution_on_circuits(frames):
    for frame in frames:
        twice = dual_frame(dual_frame(frame))
        assert signed_circuits(twice) == signed_circuits(frame)


def test_dual_circuits_are_cocircuits(frames):
    for frame in frames:
        ground = frozenset(range(frame.n))
        hyperplanes = {f.columns for f in flats(frame).flats if f.rank == frame.k - 1}
        dual = signed_circuits(dual_frame(frame))
        assert {c.support for c in dual} == {ground - h for h in hyperplanes}
        for c in dual:
            for row in kernel_basis(frame):
                assert sum(a * b for a, b in zip(c.coeffs, row)) == 0


@pytest.mark.parametrize(
    "rows, lines",
    [
        ([[1, 1]], set()),
        ([[1, 0], [0, 1]], {0, 1}),
        ([[1, 0, 1], [0, 1, 0]], {1}),
        (TRI, set()),
    ],
)
def test_kirwan_lines(rows, lines):
    assert kirwan_degree2_lines(GaleFrame.from_rows(rows)) == lines

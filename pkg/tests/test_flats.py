import pytest

from hp0.matroid import FlatError, GaleFrame, as_local, flats, localize

from .conftest import U12


def test_tri_lattice(tri):
    lattice = flats(tri)
    assert [f.label() for f in lattice.flats] == ["{}", "{1}", "{2}", "{3}", "{1,2,3}"]
    assert [f.rank for f in lattice.flats] == [0, 1, 1, 1, 2]
    assert lattice.bottom == 0 and lattice.top == 4
    assert lattice.down_set(lattice.top) == set(range(5))
    assert lattice.down_set(lattice.bottom) == {0}
    assert lattice.meet(1, 2) == 0


def test_boolean_lattice():
    lattice = flats(GaleFrame.identity(2))
    assert len(lattice) == 4
    assert lattice.leq(1, 3) and not lattice.leq(1, 2)


def test_u12_has_two_flats():
    assert len(flats(GaleFrame.from_rows(U12))) == 2


def test_bottom_contains_loops(looped):
    lattice = flats(looped)
    assert lattice.flats[lattice.bottom].columns == {2}
    assert all(2 in f.columns for f in lattice.flats)


def test_every_flat_is_closed_and_order_is_inclusion(corpus_frame):
    lattice = flats(corpus_frame)
    for i, a in enumerate(lattice.flats):
        localize(corpus_frame, a)
        for j, b in enumerate(lattice.flats):
            assert lattice.leq(i, j) == (a.columns <= b.columns)


def test_localize(tri):
    local = localize(tri, frozenset({0}))
    assert local.ground == (0,)
    assert local.k == 1
    assert local.circuits == ()
    assert local.forms == ((1,), (0,))

    top = as_local(tri)
    assert top.n == 3 and top.k == 2
    assert top.circuits == ((1, 1, -1),)


def test_localize_rejects_non_flats(tri):
    with pytest.raises(FlatError):
        localize(tri, frozenset({0, 1}))
    with pytest.raises(FlatError):
        flats(tri).index(frozenset({0, 1}))


def test_flats_are_closed_under_meet(frames):
    for frame in frames:
        lattice = flats(frame)
        size = len(lattice)
        for i in range(size):
            for j in range(size):
                m = lattice.meet(i, j)
                assert lattice.flats[m].columns == lattice.flats[i].columns & lattice.flats[j].columns
                below = [c for c in range(size) if lattice.leq(c, i) and lattice.leq(c, j)]
                assert all(lattice.leq(c, m) for c in below)

from fractions import Fraction

import pytest

from hp0.bc import h_vector
from hp0.matroid import GaleFrame
from hp0.module import (
    FreenessError,
    central_fiber_dims,
    fiber_dimension,
    freeness_certificate,
    hp0_hilbert,
    random_lambda,
)
from hp0.poly import hilbert_expansion


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 1]], (1, 0, 0, 0)),
        ([[1, 0, 1], [0, 1, 1]], (1, 1, 0, 0)),
        ([[1, 0], [0, 1]], (1, 0, 0, 0)),
        ([[1, 1, 0]], (0, 0, 0, 0)),
    ],
)
def test_central_fiber(rows, expected):
    assert central_fiber_dims(GaleFrame.from_rows(rows), 3).dims == expected


def test_central_fiber_is_the_h_vector(corpus_frame):
    h = h_vector(corpus_frame)
    dims = central_fiber_dims(corpus_frame, 5).dims
    assert dims == tuple(h[d] if d < len(h) else 0 for d in range(6))


def test_central_fiber_on_random_frames(random_frames):
    for frame in random_frames:
        h = h_vector(frame)
        assert central_fiber_dims(frame, 4).dims == tuple(h[d] if d < len(h) else 0 for d in range(5))


def test_freeness_certificate_tri(tri):
    cert = freeness_certificate(tri, 6)
    assert cert.h_poly == (1, 1)
    assert cert.k == 2
    assert cert.basis_monomials == ((0, 0, 0), (0, 0, 1))
    assert hp0_hilbert(tri, 6).dims == hilbert_expansion(cert.h_poly, cert.k, 6)


def test_freeness_certificate_u12_and_identity(u12):
    assert freeness_certificate(u12, 5).h_poly == (1,)
    cert = freeness_certificate(GaleFrame.identity(3), 4)
    assert cert.h_poly == (1,) and cert.k == 3


def test_freeness_needs_room(u12):
    with pytest.raises(FreenessError, match="raise d_max"):
        freeness_certificate(u12, 1)


def test_freeness_of_corpus(corpus_frame):
    cert = freeness_certificate(corpus_frame, 6)
    assert len(cert.basis_monomials) == sum(cert.h_poly)


def test_generic_fiber_u12(u12):
    special = fiber_dimension(u12, [1], 6)
    assert special.dim == 1
    assert special.stabilized


def test_generic_fiber_tri(tri):
    special = fiber_dimension(tri, [Fraction(1), Fraction(2)], 8)
    assert special.dim == 2
    assert special.stabilized


def test_zero_lambda_recovers_central_fiber(tri):
    assert fiber_dimension(tri, [0, 0], 4).dim == sum(central_fiber_dims(tri, 4).dims)


def test_seeded_fibers_equal_h_of_one(corpus_frame):
    h = h_vector(corpus_frame)
    for seed in range(3):
        special = fiber_dimension(corpus_frame, random_lambda(corpus_frame.k, seed), len(h) + 1, seed=seed)
        assert special.stabilized
        assert special.dim == sum(h)


def test_lambda_length_checked(tri):
    with pytest.raises(ValueError):
        fiber_dimension(tri, [1], 3)


def test_random_lambda_is_reproducible():
    assert random_lambda(3, 5) == random_lambda(3, 5)
    assert len(random_lambda(2, 0)) == 2

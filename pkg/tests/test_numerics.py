"""Tests for polynomial evaluation, root finding and unimodular filtering."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from blaschke import ComplexPolynomial, filter_unimodular, poly_eval, poly_roots
from conftest import multiset_close

# Constant equations at pole parameter 1/2, cleared to integer coefficients.
DEGREE5_CONSTANT_EQN = [16, 28, 33, 28, 16]
DEGREE7_CONSTANT_EQN = [64, 144, 216, 245, 216, 144, 64]


def test_eval_root_of_z2_plus_1():
    p = ComplexPolynomial([1, 0, 1])
    assert poly_eval(p, 1j) == 0


def test_eval_cubic_at_minus_one():
    # 4c^3 + 8c^2 + 9c + 5 vanishes at -1: factor (c + 1)(4c^2 + 4c + 5).
    p = ComplexPolynomial([5, 9, 8, 4])
    assert poly_eval(p, -1) == 0


def test_eval_constant():
    p = ComplexPolynomial([3.5 - 2j])
    assert poly_eval(p, 0.7j) == 3.5 - 2j
    assert poly_eval(p, 0) == 3.5 - 2j


def test_leading_trim():
    p = ComplexPolynomial([1, 2, 1e-20, 1e-22])
    assert p.degree == 1
    assert p.coeffs == (1 + 0j, 2 + 0j)


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        ComplexPolynomial([1, complex(math.nan, 0)])
    with pytest.raises(ValueError):
        poly_eval(ComplexPolynomial([1, 1]), complex(math.inf, 0))


def test_roots_of_unity():
    roots = poly_roots(ComplexPolynomial([-1, 0, 0, 0, 1]))
    assert multiset_close(roots, [1, -1, 1j, -1j], 1e-10)


def test_degree5_constant_equation_root():
    roots = poly_roots(ComplexPolynomial(DEGREE5_CONSTANT_EQN))
    assert any(abs(r - (-0.856763 - 0.515711j)) <= 1e-4 for r in roots)


def test_degree7_constant_equation_root():
    roots = poly_roots(ComplexPolynomial(DEGREE7_CONSTANT_EQN))
    assert any(abs(r - (0.217617 - 0.976034j)) <= 1e-4 for r in roots)


def test_roots_degree_zero_rejected():
    with pytest.raises(ValueError):
        poly_roots(ComplexPolynomial([1.0]))


@pytest.mark.parametrize(
    "coeffs",
    [
        [5, 9, 8, 4],
        [1, 0, 0, 0, 0, 1],
        [2 + 1j, -3, 0.5j, 1],
        [0, 0, 1, 1],
        [1, -2, 1],
        DEGREE5_CONSTANT_EQN,
        DEGREE7_CONSTANT_EQN,
    ],
)
def test_roots_match_companion_matrix(coeffs):
    # numpy.roots (companion-matrix eigenvalues) is the independent oracle.
    p = ComplexPolynomial(coeffs)
    ours = poly_roots(p)
    reference = np.roots(list(reversed([complex(c) for c in p.coeffs])))
    assert len(ours) == p.degree
    assert multiset_close(ours, list(reference), 1e-7)


def test_roots_residual_contract():
    rng_coeffs = [3 - 2j, 0.4, -1j, 0.25, 1 + 1j]
    p = ComplexPolynomial(rng_coeffs)
    scale = max(abs(c) for c in p.coeffs)
    for r in poly_roots(p):
        assert abs(poly_eval(p, r)) <= 1e-10 * scale


complex_coeff = st.builds(
    complex,
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(complex_coeff, min_size=2, max_size=8))
def test_roots_count_and_residual(coeffs):
    assume(max(abs(c) for c in coeffs) > 1e-3)
    p = ComplexPolynomial(coeffs)
    assume(p.degree >= 1)
    roots = poly_roots(p)
    assert len(roots) == p.degree
    scale = max(abs(c) for c in p.coeffs)
    # Residuals at roots far outside the unit circle scale with the
    # polynomial's magnitude there.
    for r in roots:
        assert abs(poly_eval(p, r)) <= 1e-10 * scale * max(1.0, abs(r)) ** p.degree


@st.composite
def self_inversive(draw):
    """Polynomial whose root multiset is closed under r -> 1/conj(r).

    Built from well separated roots (interior/exterior pairs plus boundary
    points) so every root is simple and well conditioned.
    """
    interior = draw(
        st.lists(
            st.builds(
                lambda r, t: (0.2 + 0.55 * r) * cmath.exp(2j * math.pi * t),
                st.floats(0, 1),
                st.floats(0, 1),
            ),
            max_size=2,
        )
    )
    boundary = draw(st.lists(st.floats(0, 2 * math.pi), max_size=2))
    roots = []
    for r in interior:
        roots.extend([r, 1 / r.conjugate()])
    roots.extend(cmath.exp(1j * t) for t in boundary)
    assume(roots)
    assume(
        all(
            abs(roots[i] - roots[j]) > 0.05
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
        )
    )
    return ComplexPolynomial.from_roots(roots)


@settings(max_examples=60, deadline=None)
@given(self_inversive())
def test_self_inversive_roots_closed_under_inversion(p):
    roots = poly_roots(p)
    inverted = [1 / r.conjugate() for r in roots]
    assert multiset_close(roots, inverted, 1e-8)


def test_filter_unimodular_basic():
    kept = filter_unimodular([2 + 0j, 1j, 0.5 + 0j], 1e-6)
    assert kept == [1j]


def test_filter_unimodular_cubic():
    # The non-unimodular roots of (c + 1)(4c^2 + 4c + 5) have modulus
    # sqrt(5)/2, so only -1 survives.
    roots = poly_roots(ComplexPolynomial([5, 9, 8, 4]))
    kept = filter_unimodular(roots, 1e-8)
    assert len(kept) == 1
    assert abs(kept[0] - (-1)) <= 1e-10


def test_filter_unimodular_empty():
    assert filter_unimodular([], 1e-6) == []


def test_filter_unimodular_requires_positive_tol():
    with pytest.raises(ValueError):
        filter_unimodular([1j], 0.0)


@settings(max_examples=40, deadline=None)
@given(st.lists(complex_coeff, max_size=6), st.floats(min_value=1e-9, max_value=0.1))
def test_filter_unimodular_projects_exactly(values, tol):
    kept = filter_unimodular(values, tol)
    for k in kept:
        assert abs(k) == 1.0
    # Output comes from input: each kept value is the projection of a value
    # within tol of the circle.
    for k in kept:
        assert any(abs(abs(v) - 1) <= tol and abs(v / abs(v) - k) == 0 for v in values if v != 0)


def test_polynomial_arithmetic():
    a = ComplexPolynomial([1, 1])
    b = ComplexPolynomial([-1, 1])
    assert (a * b).coeffs == (-1 + 0j, 0j, 1 + 0j)
    assert (a + b).coeffs == (0j, 2 + 0j)
    assert (a - b).coeffs == (2 + 0j,)
    assert a.derivative().coeffs == (1 + 0j,)

"""Automorphisms of the unit disk, M(z) = c (z - alpha) / (1 - conj(alpha) z).

Besides evaluation and composition this module tracks orbits of the origin
and solves for the unimodular constants c that close such an orbit after a
prescribed number of steps, which is the engine behind constructing products
invariant under M.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainError, NormalizationError, NoSolution
from .numerics import ComplexPolynomial, filter_unimodular, poly_roots, require_finite

UNIT_MODULUS_TOL = 1e-9
OPEN_DISK_MARGIN = 1e-12
EVAL_DOMAIN_TOL = 1e-9
IDENTITY_TOL = 1e-8
ORBIT_CLOSURE_TOL = 1e-8
ORBIT_DISTINCT_TOL = 1e-7
UNIMODULAR_ROOT_TOL = 1e-6


@dataclass(frozen=True)
class MoebiusTransform:
    """A disk automorphism given by its rotation constant and its zero."""

    c: complex
    alpha: complex

    def __post_init__(self) -> None:
        c = require_finite(self.c)
        alpha = require_finite(self.alpha)
        if abs(abs(c) - 1.0) > UNIT_MODULUS_TOL:
            raise ValueError(f"|c| = {abs(c)!r} is not within {UNIT_MODULUS_TOL} of 1")
        if abs(alpha) > 1.0 - OPEN_DISK_MARGIN:
            raise ValueError(f"|alpha| = {abs(alpha)!r} must stay inside the open disk")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, z: complex) -> complex:
        return moebius_eval(self, z)


IDENTITY = MoebiusTransform(1.0 + 0j, 0j)


@dataclass(frozen=True)
class OrbitReport:
    """The first ``n`` points ``0, M(0), ..., M^{n-1}(0)`` of the orbit of 0."""

    points: tuple[complex, ...]
    closes: bool
    min_pairwise_gap: float


def moebius_eval(m: MoebiusTransform, z: complex) -> complex:
    """Apply ``m`` to a point of the closed disk."""
    z = require_finite(z)
    if abs(z) > 1.0 + EVAL_DOMAIN_TOL:
        raise DomainError(f"|z| = {abs(z)!r} lies outside the closed unit disk")
    return m.c * (z - m.alpha) / (1.0 - m.alpha.conjugate() * z)


def _matrix(m: MoebiusTransform) -> tuple[complex, complex, complex, complex]:
    # (a, b, p, q) with M(z) = (a z + b) / (p z + q).
    return m.c, -m.c * m.alpha, -m.alpha.conjugate(), 1.0 + 0j


def _from_matrix(a: complex, b: complex, p: complex, q: complex) -> MoebiusTransform:
    if q == 0 or a == 0:
        raise NormalizationError("coefficient matrix does not describe a disk automorphism")
    c = a / q
    if abs(abs(c) - 1.0) > UNIT_MODULUS_TOL:
        raise NormalizationError(f"derived constant has modulus {abs(c)!r}")
    alpha = -b / a
    if abs(alpha) > 1.0 - OPEN_DISK_MARGIN:
        raise NormalizationError(f"derived pole parameter has modulus {abs(alpha)!r}")
    return MoebiusTransform(c / abs(c), alpha)


def moebius_compose(outer: MoebiusTransform, inner: MoebiusTransform) -> MoebiusTransform:
    """The normalized form of ``outer ∘ inner``."""
    a1, b1, p1, q1 = _matrix(outer)
    a2, b2, p2, q2 = _matrix(inner)
    return _from_matrix(
        a1 * a2 + b1 * p2,
        a1 * b2 + b1 * q2,
        p1 * a2 + q1 * p2,
        p1 * b2 + q1 * q2,
    )


def moebius_inverse(m: MoebiusTransform) -> MoebiusTransform:
    a, b, p, q = _matrix(m)
    return _from_matrix(q, -b, -p, a)


def moebius_power(m: MoebiusTransform, n: int) -> MoebiusTransform:
    """The n-fold iterate of ``m`` (n >= 0) by repeated squaring."""
    if n < 0:
        raise ValueError("power must be nonnegative")
    result = IDENTITY
    base = m
    while n:
        if n & 1:
            result = moebius_compose(result, base)
        base = moebius_compose(base, base)
        n >>= 1
    return result


def moebius_iterate_zero(m: MoebiusTransform, n: int, closure_tol: float = ORBIT_CLOSURE_TOL) -> OrbitReport:
    """Orbit report for ``0, M(0), ..., M^{n-1}(0)`` by pointwise iteration."""
    if n < 1:
        raise ValueError("need at least one orbit point")
    points = [0j]
    for _ in range(n - 1):
        points.append(moebius_eval(m, points[-1]))
    closes = abs(moebius_eval(m, points[-1])) <= closure_tol
    if n == 1:
        gap = math.inf
    else:
        gap = min(abs(x - y) for x, y in combinations(points, 2))
    return OrbitReport(tuple(points), closes, gap)


def moebius_order(m: MoebiusTransform, cap: int, tol: float = IDENTITY_TOL) -> Optional[int]:
    """Smallest k <= cap with the k-th iterate equal to the identity, if any.

    Iterates of maps without finite order can degenerate toward the boundary
    of the parameter space; that also counts as "no order within the cap".
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    current = m
    for k in range(1, cap + 1):
        if max(abs(current.c - 1.0), abs(current.alpha)) <= tol:
            return k
        try:
            current = moebius_compose(current, m)
        except NormalizationError:
            return None
    return None


def moebius_fixed_point_in_disk(m: MoebiusTransform) -> Optional[complex]:
    """The fixed point of ``m`` inside the open disk, or None.

    Fixed points solve conj(alpha) z^2 + (c - 1) z - c alpha = 0; the two
    roots have reciprocal-conjugate moduli, so at most one is interior.
    """
    if max(abs(m.c - 1.0), abs(m.alpha)) <= 1e-12:
        raise ValueError("the identity fixes every point")
    if m.alpha == 0:
        return 0j
    quad = ComplexPolynomial([-m.c * m.alpha, m.c - 1.0, m.alpha.conjugate()])
    interior = [z for z in poly_roots(quad) if abs(z) <= 1.0 - 1e-9]
    if not interior:
        return None
    return min(interior, key=abs)


def closure_polynomial(alpha: complex, n: int) -> ComplexPolynomial:
    """Polynomial in c whose vanishing is equivalent to M^n(0) = 0.

    The coefficient matrix of M has entries polynomial in c; its n-th power
    is formed by repeated squaring and the numerator-constant entry is the
    returned polynomial.  This keeps the dependency on c exact instead of
    sampling orbits.
    """
    alpha = require_finite(alpha)
    if n < 1:
        raise ValueError("need n >= 1")
    one = ComplexPolynomial([1.0])
    zero = ComplexPolynomial([0j])
    base = (
        (ComplexPolynomial([0j, 1.0]), ComplexPolynomial([0j, -alpha])),
        (ComplexPolynomial([-alpha.conjugate()]), one),
    )
    result = ((one, zero), (zero, one))
    k = n
    power = base
    while k:
        if k & 1:
            result = _pmat_mul(result, power)
        power = _pmat_mul(power, power)
        k >>= 1
    return result[0][1]


_PolyMat = tuple[tuple[ComplexPolynomial, ComplexPolynomial], tuple[ComplexPolynomial, ComplexPolynomial]]


def _pmat_mul(x: _PolyMat, y: _PolyMat) -> _PolyMat:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def solve_unimodular_c(
    alpha: complex,
    n: int,
    tol: float = ORBIT_DISTINCT_TOL,
    *,
    unimodular_tol: float = UNIMODULAR_ROOT_TOL,
    closure_tol: float = ORBIT_CLOSURE_TOL,
) -> list[tuple[complex, OrbitReport]]:
    """All unimodular constants c for which the orbit of 0 closes after n steps.

    Roots of :func:`closure_polynomial` are filtered to the unit circle,
    c = 1 is discarded, and each survivor must produce an orbit that closes
    with ``min_pairwise_gap >= tol``.  Passing ``tol = 0`` admits degenerate
    orbits whose points coincide.  Returns (c, orbit) pairs sorted by the
    phase of c.
    """
    alpha = require_finite(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if abs(alpha) > 1.0 - OPEN_DISK_MARGIN:
        raise ValueError("alpha must lie inside the open disk")
    if n < 2:
        raise ValueError("need n >= 2")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    candidates = filter_unimodular(poly_roots(closure_polynomial(alpha, n)), unimodular_tol)
    deduped: list[complex] = []
    for c in candidates:
        if abs(c - 1.0) <= IDENTITY_TOL:
            continue
        if any(abs(c - seen) <= 1e-8 for seen in deduped):
            continue
        deduped.append(c)
    solutions = []
    for c in deduped:
        orbit = moebius_iterate_zero(MoebiusTransform(c, alpha), n, closure_tol)
        if orbit.closes and orbit.min_pairwise_gap >= tol:
            solutions.append((c, orbit))
    if not solutions:
        raise NoSolution(f"no unimodular constant closes a {n}-step orbit for alpha={alpha!r}")
    solutions.sort(key=lambda item: cmath.phase(item[0]) % (2 * math.pi))
    return solutions

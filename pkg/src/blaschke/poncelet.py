"""Poncelet ellipse of degree-4 products and the boundary-pair properties.

For a canonical degree-4 product whose distinguished zero a1 satisfies
``a1 + conj(a1) a2 a3 = a2 + a3``, the curve inscribed in all chords of
equal boundary value is an ellipse with foci a2, a3, and the two diagonals
of each preimage quadrilateral meet at a1.  Lines through a1, and circles
through 0 and 1/conj(a1), cut the unit circle in points of equal value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .decompose import check_paired_conditions_2n
from .errors import (
    BadShape,
    ConditionsUnsatisfied,
    NoConcurrentPairing,
    NoIntersection,
    NondegeneracyError,
)
from .numerics import require_finite
from .products import (
    ORIGIN_ZERO_TOL,
    BlaschkeProduct,
    blaschke_eval,
    blaschke_preimages,
)

CONDITION_TOL = 1e-7
CHORD_TOL = 1e-7


@dataclass(frozen=True)
class PonceletEllipse:
    """Ellipse described by its foci and the focal-distance sum."""

    focus1: complex
    focus2: complex
    focal_sum: float

    def __post_init__(self) -> None:
        for f in (self.focus1, self.focus2):
            if abs(f) >= 1.0:
                raise NondegeneracyError(f"focus {f!r} must lie inside the open disk")
        if self.focal_sum <= abs(self.focus1 - self.focus2) + 1e-12:
            raise NondegeneracyError("focal sum must exceed the focal distance")


@dataclass(frozen=True)
class ChordConcurrencyReport:
    """A preimage pairing whose two chords both pass through the target point."""

    preimages: tuple[complex, ...]
    pairing: tuple[tuple[int, int], tuple[int, int]]
    distances: tuple[float, float]


def poncelet_ellipse(
    product: BlaschkeProduct,
    foci_indices: tuple[int, int],
    tol: float = CONDITION_TOL,
) -> PonceletEllipse:
    """The inscribed ellipse of a degree-4 product with the paired-zero condition.

    ``foci_indices`` selects the two zeros acting as foci; of the remaining
    two zeros, one is the origin zero of the canonical form and the other is
    the distinguished zero a1 entering the condition.
    """
    n = product.degree
    if n != 4:
        raise BadShape("the ellipse construction needs degree 4")
    i, j = foci_indices
    if i == j or not all(0 <= k < n for k in (i, j)):
        raise BadShape("foci indices must be two distinct zero indices")
    rest = [k for k in range(n) if k not in (i, j)]
    rest.sort(key=lambda k: abs(product.zeros[k]))
    origin_index, a1_index = rest
    conditions = check_paired_conditions_2n(product, a1_index, ((i, j),), tol)
    if not conditions.satisfied:
        raise ConditionsUnsatisfied(
            f"zero condition residual {abs(conditions.residuals[0]):.3e} exceeds {tol}"
        )
    f1, f2 = product.zeros[i], product.zeros[j]
    radicand = (abs(f1) ** 2 + abs(f2) ** 2 - 2.0) / (abs(f1) ** 2 * abs(f2) ** 2 - 1.0)
    focal_sum = abs(1.0 - f1.conjugate() * f2) * math.sqrt(radicand)
    return PonceletEllipse(f1, f2, focal_sum)


def _point_line_distance(p: complex, q: complex, x: complex) -> float:
    """Perpendicular distance from ``x`` to the infinite line through p, q."""
    return abs(((x - p) * (q - p).conjugate()).imag) / abs(q - p)


def chord_concurrency(
    product: BlaschkeProduct,
    a1: complex,
    lam: complex,
    tol: float = CHORD_TOL,
) -> ChordConcurrencyReport:
    """Find the preimage pairing whose chords both pass through ``a1``.

    The four boundary preimages of ``lam`` admit three perfect pairings; the
    first one whose two chords come within ``tol`` of ``a1`` is reported.
    """
    if product.degree != 4:
        raise BadShape("chord concurrency needs degree 4")
    a1 = require_finite(a1)
    pts = blaschke_preimages(product, lam)
    pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
    for pairing in pairings:
        d = tuple(
            _point_line_distance(pts[pair[0]], pts[pair[1]], a1) for pair in pairing
        )
        if max(d) <= tol:
            return ChordConcurrencyReport(pts, pairing, d)
    raise NoConcurrentPairing(
        f"no chord pairing of the preimages of {lam!r} passes through {a1!r}"
    )


def line_through_a1_property(product: BlaschkeProduct, a1: complex, theta: float) -> float:
    """``|B(z1) - B(z2)|`` at the two boundary crossings of a line through a1.

    The line is ``{a1 + t e^(i theta)}``; an interior point always yields two
    real parameter roots.
    """
    a1 = require_finite(a1)
    if abs(a1) >= 1.0:
        raise ValueError("a1 must lie inside the open disk")
    direction = cmath.exp(1j * theta)
    b = (a1.conjugate() * direction).real
    disc = math.sqrt(b * b + 1.0 - abs(a1) ** 2)
    z1 = a1 + (-b + disc) * direction
    z2 = a1 + (-b - disc) * direction
    return abs(blaschke_eval(product, z1) - blaschke_eval(product, z2))


def circle_through_pole_property(
    product: BlaschkeProduct, a1: complex, center_param: float
) -> float:
    """``|B(z1) - B(z2)|`` at the boundary crossings of a pencil circle.

    The pencil consists of circles through 0 and 1/conj(a1); their centers
    lie on the perpendicular bisector of that segment and ``center_param``
    is the signed offset along it.
    """
    a1 = require_finite(a1)
    if abs(a1) <= ORIGIN_ZERO_TOL:
        raise ValueError("a1 must be nonzero to define the exterior pole")
    w = 1.0 / a1.conjugate()
    center = w / 2.0 + center_param * 1j * w / abs(w)
    # Radical line of the pencil circle and the unit circle: Re(conj(q) z) = 1/2.
    x = 1.0 / (2.0 * abs(center))
    if x >= 1.0:
        raise NoIntersection("selected circle meets the unit circle in fewer than two points")
    u = center / abs(center)
    y = math.sqrt(1.0 - x * x)
    z1 = u * complex(x, y)
    z2 = u * complex(x, -y)
    return abs(blaschke_eval(product, z1) - blaschke_eval(product, z2))

"""Tests for Blaschke product evaluation, composition, equality, preimages."""

from __future__ import annotations

import cmath
import math
import random

import pytest

from blaschke import (
    BlaschkeProduct,
    DomainError,
    MoebiusTransform,
    blaschke_compose,
    blaschke_equal,
    blaschke_eval,
    blaschke_preimages,
    canonical_form,
    moebius_eval,
)
from conftest import multiset_close, random_interior, random_product


def test_validation():
    with pytest.raises(ValueError):
        BlaschkeProduct(2.0, (0j,))
    with pytest.raises(ValueError):
        BlaschkeProduct(1.0, (1.0 + 0j,))
    with pytest.raises(ValueError):
        BlaschkeProduct(1.0, ())


def test_eval_monomial():
    b = BlaschkeProduct(1.0, (0j, 0j, 0j, 0j))
    assert blaschke_eval(b, 0.5) == 0.0625


def test_eval_vanishes_at_zeros():
    rng = random.Random(3)
    for _ in range(10):
        b = random_product(rng, 4)
        for a in b.zeros:
            assert abs(blaschke_eval(b, a)) <= 1e-14


def test_eval_domain_error():
    with pytest.raises(DomainError):
        blaschke_eval(BlaschkeProduct(1.0, (0j,)), 1.5)


def test_degree4_product_invariant_under_involution():
    # Zeros 1/2, 1/2 - i/2 and their induced third zero (a1-a2)/(1-conj(a1)a2)
    # make the product invariant under the involution with pole 1/2.
    zeros = (0j, 0.5 + 0j, 0.5 - 0.5j, 0.2 + 0.6j)
    b = BlaschkeProduct(1.0, zeros)
    m = MoebiusTransform(-1.0, 0.5)
    z = 0.3
    assert abs(blaschke_eval(b, moebius_eval(m, z)) - blaschke_eval(b, z)) <= 1e-12


def test_boundary_modulus():
    rng = random.Random(17)
    for _ in range(20):
        b = random_product(rng, rng.randint(1, 8), radius=0.9)
        for k in range(64):
            z = cmath.exp(2j * math.pi * k / 64)
            assert abs(abs(blaschke_eval(b, z)) - 1.0) <= 1e-10


def test_canonical_form_flag():
    assert canonical_form(BlaschkeProduct(1.0, (0j, 0.5))).is_canonical
    assert not canonical_form(BlaschkeProduct(1j, (0j, 0.5))).is_canonical
    assert not canonical_form(BlaschkeProduct(1.0, (0.5 + 0j,))).is_canonical


def test_compose_monomials():
    z2 = BlaschkeProduct(1.0, (0j, 0j))
    z4 = blaschke_compose(z2, z2)
    assert z4.degree == 4
    assert blaschke_equal(z4, BlaschkeProduct(1.0, (0j,) * 4))


def test_compose_square_of_degree2():
    inner = BlaschkeProduct(1.0, (0j, 2 / 3))
    outer = BlaschkeProduct(1.0, (0j, 0j))
    composed = blaschke_compose(outer, inner)
    assert multiset_close(composed.zeros, [0, 0, 2 / 3, 2 / 3], 1e-9)
    assert abs(composed.constant - 1.0) <= 1e-9


def test_compose_degree_law():
    rng = random.Random(29)
    for _ in range(10):
        outer = random_product(rng, rng.randint(1, 3), radius=0.6)
        inner = random_product(rng, rng.randint(1, 3), radius=0.6)
        composed = blaschke_compose(outer, inner)
        assert composed.degree == outer.degree * inner.degree
        for _ in range(5):
            z = random_interior(rng, 0.8)
            direct = blaschke_eval(outer, blaschke_eval(inner, z))
            assert abs(blaschke_eval(composed, z) - direct) <= 1e-9


def test_compose_with_identity_inner():
    rng = random.Random(31)
    identity = BlaschkeProduct(1.0, (0j,))
    for _ in range(5):
        outer = random_product(rng, 3, radius=0.7)
        assert blaschke_equal(blaschke_compose(outer, identity), outer)


def test_equal_permuted_zeros():
    rng = random.Random(43)
    b = random_product(rng, 5)
    zs = list(b.zeros)
    rng.shuffle(zs)
    assert blaschke_equal(b, BlaschkeProduct(b.constant, tuple(zs)))


def test_equal_degree_mismatch():
    a = BlaschkeProduct(1.0, (0j, 0j))
    b = BlaschkeProduct(1.0, (0j, 0j, 0j))
    assert not blaschke_equal(a, b)


def test_equal_random_pairs_differ():
    rng = random.Random(47)
    for _ in range(50):
        degree = rng.randint(2, 6)
        a = random_product(rng, degree)
        b = random_product(rng, degree)
        assert not blaschke_equal(a, b)


def test_equal_between_product_and_its_composition_with_invariant():
    # Degree-5 product built on the orbit of its invariant map compares equal
    # to its own precomposition with that map.
    from blaschke import construct_invariant_product, solve_unimodular_c

    (c, _), *_ = [
        s for s in solve_unimodular_c(0.5, 5) if abs(s[0] - (-0.856763 - 0.515711j)) <= 1e-4
    ]
    m = MoebiusTransform(c, 0.5)
    b = construct_invariant_product(m, 5)
    # The map is itself a degree-1 product with constant c and zero alpha.
    m_as_product = BlaschkeProduct(m.c, (m.alpha,))
    composed = blaschke_compose(b, m_as_product)
    assert blaschke_equal(composed, b, 1e-8)


def test_compose_degree6_factors(degree6_paired_product):
    # Composing the two printed factors of the order-2 orbit product at pole
    # 1/2 reproduces the product itself (up to solver dust in the zeros).
    inner = BlaschkeProduct(1.0, (0j, 0.5))
    outer = BlaschkeProduct(1.0, (0j, -3.70074e-17, -7.40149e-17))
    composed = blaschke_compose(outer, inner)
    assert blaschke_equal(composed, degree6_paired_product, 1e-8)


def test_preimages_of_monomial():
    b = BlaschkeProduct(1.0, (0j,) * 4)
    pts = blaschke_preimages(b, 1.0)
    assert multiset_close(pts, [1, 1j, -1, -1j], 1e-10)


def test_preimages_square():
    b = BlaschkeProduct(1.0, (0j, 0j))
    pts = blaschke_preimages(b, -1.0)
    assert multiset_close(pts, [1j, -1j], 1e-10)


def test_preimages_sorted_by_argument():
    rng = random.Random(53)
    b = random_product(rng, 5)
    pts = blaschke_preimages(b, cmath.exp(0.7j))
    args = [math.atan2(p.imag, p.real) for p in pts]
    assert args == sorted(args)


def test_preimages_contract():
    rng = random.Random(59)
    for _ in range(20):
        b = random_product(rng, rng.randint(1, 6))
        lam = cmath.exp(2j * math.pi * rng.random())
        pts = blaschke_preimages(b, lam)
        assert len(pts) == b.degree
        for p in pts:
            assert abs(abs(p) - 1.0) <= 1e-12
            assert abs(blaschke_eval(b, p) - lam) <= 1e-8


def test_preimages_lambda_must_be_unimodular():
    with pytest.raises(DomainError):
        blaschke_preimages(BlaschkeProduct(1.0, (0j,)), 0.5)

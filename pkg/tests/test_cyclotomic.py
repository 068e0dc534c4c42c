"""Exact root-of-unity arithmetic against brute-force oracles."""

from __future__ import annotations

import random

import pytest

from helpzc.cyclotomic import (
    CycSum,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    mobius,
    root_power_sum,
    subfield_trace,
    trace_root,
)

from helpers import galois_trace_oracle, mobius_oracle, phi_oracle

@pytest.mark.parametrize("n,expected", [(1, 1), (10, 1), (12, 0)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected

def test_mobius_against_recursive_oracle():
    for n in range(1, 121):
        assert mobius(n) == mobius_oracle(n)

@pytest.mark.parametrize("n,expected", [(1, 1), (10, 4), (12, 4)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected

def test_euler_phi_against_counting_oracle():
    for n in range(1, 200):
        assert euler_phi(n) == phi_oracle(n)

@pytest.mark.parametrize(
    "m,k,expected",
    [(12, 0, 4), (10, 5, -4), (10, 2, -1), (12, 2, 2)],
)
def test_trace_root_examples(m, k, expected):
    assert trace_root(m, k) == expected

def test_trace_root_matches_galois_sum_small():
    for m in range(1, 25):
        for k in range(m):
            assert trace_root(m, k) == galois_trace_oracle(m, k)

@pytest.mark.parametrize("k,d,expected", [(5, 10, 5), (5, 3, 0), (1, 0, 1)])
def test_root_power_sum_examples(k, d, expected):
    assert root_power_sum(k, d) == expected

def test_root_power_sum_matches_explicit_summation():
    for k in range(1, 31):
        for d in range(-60, 61):
            total = CycSum.zero(k)
            for i in range(k):
                total = total + CycSum.root(k, -i * d)
            assert total.as_integer() == root_power_sum(k, d)

def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(10) == (1, -1, 1, -1, 1)

def test_cyclotomic_polynomials_multiply_to_x_m_minus_1():
    from helpzc.cyclotomic import _poly_mul

    for m in range(1, 61):
        prod = [1]
        for d in divisors(m):
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
        assert prod == [-1] + [0] * (m - 1) + [1]
        assert len(cyclotomic_polynomial(m)) - 1 == euler_phi(m)

def test_trace_is_linear():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randrange(1, 31)
        z1 = CycSum(m, [rng.randrange(-5, 6) for _ in range(m)])
        z2 = CycSum(m, [rng.randrange(-5, 6) for _ in range(m)])
        a, b = rng.randrange(-4, 5), rng.randrange(-4, 5)
        assert (a * z1 + b * z2).trace() == a * z1.trace() + b * z2.trace()

def test_trace_conjugation_invariant():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randrange(1, 31)
        z = CycSum(m, [rng.randrange(-5, 6) for _ in range(m)])
        assert z.conjugate().trace() == z.trace()
        assert z.conjugate().conjugate() == z

def test_rescale_trace_relation():
    # For z in the order-m frame, the order-M trace is phi(M)/phi(m) times larger.
    rng = random.Random(13)
    for m in range(1, 31):
        for mult in (2, 3):
            big = m * mult
            if big > 60:
                continue
            z = CycSum(m, [rng.randrange(-3, 4) for _ in range(m)])
            assert z.rescale(big).trace() * euler_phi(m) == z.trace() * euler_phi(big)

def test_rescale_preserves_equality_and_value():
    assert CycSum.root(5, 1).rescale(10) == CycSum.root(10, 2)
    z = CycSum(6, [1, -2, 0, 3, 0, 1])
    assert z.rescale(12) == z
    with pytest.raises(ValueError, match="incompatible cyclotomic orders"):
        z.rescale(9)

def test_conjugate_and_root_examples():
    assert CycSum.root(10, 1).conjugate() == CycSum.root(10, 9)
    assert (CycSum.root(10, 1) + CycSum.root(10, -1)).trace() == 2

def test_trace_example_values():
    assert CycSum.integer(10, 1).trace() == 4
    window = CycSum.zero(10)
    for e in range(-2, 3):
        window = window + CycSum.root(10, e)
    assert window.trace() == 4

def test_canonical_equality_is_stable_under_cyclotomic_shifts():
    # Adding any polynomial multiple of Phi_m must not change the value.
    rng = random.Random(17)
    for m in (4, 6, 10, 12):
        phi_m = cyclotomic_polynomial(m)
        for _ in range(50):
            z = CycSum(m, [rng.randrange(-5, 6) for _ in range(m)])
            shift = [0] * m
            mult_deg = m - len(phi_m)
            k = rng.randrange(0, mult_deg + 1)
            c = rng.randrange(-3, 4)
            for j, p in enumerate(phi_m):
                shift[(j + k) % m] += c * p
            assert z + CycSum(m, shift) == z

def test_equality_is_equivalence_on_random_values():
    rng = random.Random(19)
    for _ in range(50):
        m = rng.choice([2, 3, 4, 6, 10, 12])
        z = CycSum(m, [rng.randrange(-4, 5) for _ in range(m)])
        w = CycSum(m, [rng.randrange(-4, 5) for _ in range(m)])
        assert z == z
        assert (z == w) == (w == z)

def test_zero_of_full_residue_system():
    # The sum of all m-th roots of unity vanishes for m > 1.
    for m in range(2, 20):
        total = CycSum(m, [1] * m)
        assert total.is_zero()
        assert total == CycSum.zero(m)

def test_mul_root_and_product_consistency():
    rng = random.Random(23)
    for _ in range(50):
        m = rng.randrange(2, 20)
        z = CycSum(m, [rng.randrange(-3, 4) for _ in range(m)])
        k = rng.randrange(-2 * m, 2 * m)
        assert z.mul_root(k) == z * CycSum.root(m, k)

def test_descend_and_subfield_trace():
    z = CycSum.root(10, 4) + CycSum.root(10, 6)
    w = z.descend(2)
    assert w.order == 5
    assert w == CycSum.root(5, 2) + CycSum.root(5, 3)
    assert subfield_trace(z, 2) == -2
    with pytest.raises(ValueError, match="subframe"):
        CycSum.root(10, 3).descend(2)

def test_arithmetic_order_mismatch_raises():
    with pytest.raises(ValueError, match="incompatible cyclotomic orders"):
        CycSum.root(10, 1) + CycSum.root(5, 1)

def test_integer_detection():
    assert CycSum.integer(12, -7).as_integer() == -7
    assert not CycSum.root(12, 1).is_integer()
    with pytest.raises(ValueError):
        CycSum.root(12, 1).as_integer()

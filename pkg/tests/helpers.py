"""Shared test oracles, kept independent of the library code paths they check."""

from __future__ import annotations

import cmath
import itertools
from math import gcd

from helpzc.cyclotomic import CycSum


def mobius_oracle(n: int) -> int:
    """Recursive oracle from sum_{d | n} mu(d) = [n == 1]."""
    if n == 1:
        return 1
    return -sum(mobius_oracle(d) for d in range(1, n) if n % d == 0)


def phi_oracle(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def galois_trace_oracle(m: int, k: int) -> int:
    """Brute-force Galois sum of zeta_m^(j*k) over j coprime to m, via canonical forms."""
    total = CycSum.zero(m)
    for j in range(1, m + 1):
        if gcd(j, m) == 1:
            total = total + CycSum.root(m, j * k)
    return total.as_integer()


def float_root(m: int, k: int) -> complex:
    return cmath.exp(2j * cmath.pi * k / m)


def float_char_exponents(frame, chi, exp: int) -> list[tuple[int, int]]:
    """Character value at the class of g0^exp as (coefficient, root exponent) pairs.

    Re-derived from the closed-form character definitions so that the numeric
    multiplicity oracle shares no code with helpzc.psl2.char_value.
    """
    q, p, eps, m = frame.ctx.q, frame.ctx.p, frame.epsilon, frame.m
    if chi.kind == "trivial":
        return [(1, 0)]
    if chi.kind == "phi":
        if exp % m == 0:
            return [(q + eps, 0)]
        return [(eps, chi.h * exp % m), (eps, (-chi.h * exp) % m)]
    if chi.kind == "psi":
        return [(q - eps, 0)] if exp % m == 0 else []
    assert chi.kind == "brauer"
    out = []
    for digits in itertools.product(*(range(-r, r + 1, 2) for r in chi.weights)):
        e = sum(s * p**j for j, s in enumerate(digits))
        assert e % 2 == 0
        out.append((1, (exp * (e // 2)) % m))
    return out


def float_multiplicity(pa, chi, l: int) -> float:
    """Numeric multiplicity oracle.

    Every traced quantity chi(x) * zeta_n^(-ld) is an explicit sum of n-th
    roots with exponents divisible by d; its trace from Q(zeta_{n/d}) is the
    sum over Galois substitutions zeta -> zeta^j, j coprime to n/d, evaluated
    with complex exponentials.
    """
    n = pa.n
    total = 0.0 + 0.0j
    for d, cls, v in pa.entries():
        sub = n // d
        exps = []
        for coef, e in float_char_exponents(pa.frame, chi, cls.exp):
            shifted = (e - l * d) % n
            assert shifted % d == 0
            exps.append((coef, shifted // d))
        tr = 0.0 + 0.0j
        for j in range(1, sub + 1):
            if gcd(j, sub) == 1:
                tr += sum(coef * float_root(sub, j * e) for coef, e in exps)
        total += v * tr
    return (total / n).real


def naive_box_scan(system, box):
    """Exhaustive integer scan of a bounds box against the raw row semantics."""
    n = system.frame.m
    levels: dict[int, list[int]] = {}
    for idx, (d, _cls) in enumerate(system.layout.variables):
        levels.setdefault(d, []).append(idx)
    hits = []
    ranges = [range(lo, hi + 1) for lo, hi in zip(box.lo, box.hi)]
    for point in itertools.product(*ranges):
        if any(sum(point[i] for i in idxs) != 1 for idxs in levels.values()):
            continue
        ok = True
        for row in system.rows:
            s = row.const + sum(a * x for a, x in zip(row.coeffs, point))
            if s < 0 or s % n:
                ok = False
                break
        if ok:
            hits.append(tuple(point))
    return hits

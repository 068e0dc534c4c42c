"""Conjugacy classes and character restrictions for cyclic p-regular subgroups of PSL(2,q).

For q = p^f odd, a p-regular element g0 of order m exists exactly when
q = eps mod 2m for some sign eps, every element of order dividing m is
conjugate into <g0>, and g0^i ~ g0^j iff i = +-j mod m.  That turns class
bookkeeping into arithmetic on canonical exponents 0 <= exp <= m/2.

Character values on those classes are exact CycSum values of order m:

    trivial      1 everywhere
    phi_h        q + eps at 1, else eps * (zeta^(h i) + zeta^(-h i))
    psi_h        q - eps at 1, else 0
    chi_R        sum over digit tuples s (|s_j| <= r_j, same parity as r_j)
                 of zeta^(i * (sum_j s_j p^j) / 2)

phi_h and psi_h restrict ordinary characters when m does not divide h;
chi_R restricts a Brauer character mod p, and the irreducible ones are
exactly the tuples R of length f with digits below p and even sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .cyclotomic import CycSum, prime_factorization


@dataclass(frozen=True)
class GroupContext:
    """The group PSL(2, q) for an odd prime power q = p^f."""

    q: int
    p: int
    f: int

    @property
    def order(self) -> int:
        return self.q * (self.q - 1) * (self.q + 1) // 2


def make_context(q: int) -> GroupContext:
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be an odd prime power")
    factors = prime_factorization(q)
    if len(factors) != 1:
        raise ValueError("q must be an odd prime power")
    p, f = factors[0]
    return GroupContext(q=q, p=p, f=f)


@dataclass(frozen=True)
class ClassLabel:
    """A conjugacy class of elements of order dividing the frame order.

    exp is the canonical exponent min(i mod m, m - i mod m) of a
    representative g0^i; order is m / gcd(m, exp) with exp = 0 the identity.
    """

    order: int
    exp: int


@dataclass(frozen=True)
class CyclicFrame:
    """A distinguished cyclic subgroup <g0> of order m coprime to q."""

    ctx: GroupContext
    m: int
    epsilon: int

    def class_of(self, i: int) -> ClassLabel:
        m = self.m
        i %= m
        exp = min(i, m - i) if i else 0
        return ClassLabel(order=m // gcd(m, exp) if exp else 1, exp=exp)

    @property
    def identity(self) -> ClassLabel:
        return ClassLabel(order=1, exp=0)

    def classes(self) -> tuple[ClassLabel, ...]:
        return tuple(self.class_of(i) for i in range(self.m // 2 + 1))

    def classes_of_order_dividing(self, md: int) -> tuple[ClassLabel, ...]:
        if md < 1 or self.m % md:
            raise ValueError(f"{md} does not divide the frame order {self.m}")
        return tuple(c for c in self.classes() if md % c.order == 0)


def make_frame(ctx: GroupContext, m: int) -> CyclicFrame:
    """Frame for an element of order m; requires q = +-1 mod 2m (m > 1)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if gcd(m, ctx.q) != 1:
        raise ValueError(f"no p-regular element of order {m} in PSL(2,{ctx.q}): gcd(m, q) != 1")
    if m == 1:
        return CyclicFrame(ctx=ctx, m=1, epsilon=1)
    if (ctx.q - 1) % (2 * m) == 0:
        eps = 1
    elif (ctx.q + 1) % (2 * m) == 0:
        eps = -1
    else:
        raise ValueError(
            f"no p-regular element of order {m} in PSL(2,{ctx.q}): "
            f"requires q = +-1 mod {2 * m}"
        )
    return CyclicFrame(ctx=ctx, m=m, epsilon=eps)


@dataclass(frozen=True)
class CharRestriction:
    """A character restriction to the frame subgroup <g0>.

    kind is one of trivial / phi / psi / brauer; h indexes the phi and psi
    families, weights is the digit tuple R of a Brauer restriction chi_R.
    """

    kind: str
    h: int = 0
    weights: tuple[int, ...] = ()

    @classmethod
    def trivial(cls) -> CharRestriction:
        return cls(kind="trivial")

    @classmethod
    def phi(cls, h: int) -> CharRestriction:
        if h < 1:
            raise ValueError("phi_h requires h >= 1")
        return cls(kind="phi", h=h)

    @classmethod
    def psi(cls, h: int) -> CharRestriction:
        if h < 1:
            raise ValueError("psi_h requires h >= 1")
        return cls(kind="psi", h=h)

    @classmethod
    def brauer(cls, weights) -> CharRestriction:
        weights = tuple(int(r) for r in weights)
        if not weights or any(r < 0 for r in weights):
            raise ValueError("chi_R requires a nonempty tuple of nonnegative digits")
        if sum(weights) % 2:
            raise ValueError("chi_R requires an even digit sum")
        return cls(kind="brauer", weights=weights)

    @property
    def label(self) -> str:
        if self.kind == "trivial":
            return "1"
        if self.kind == "brauer":
            return "chi_" + ",".join(str(r) for r in self.weights)
        return f"{self.kind}_{self.h}"

    def degree(self, frame: CyclicFrame) -> int:
        if self.kind == "trivial":
            return 1
        if self.kind == "phi":
            return frame.ctx.q + frame.epsilon
        if self.kind == "psi":
            return frame.ctx.q - frame.epsilon
        out = 1
        for r in self.weights:
            out *= r + 1
        return out


def _brauer_half_exponents(p: int, weights: tuple[int, ...]) -> list[int]:
    """Half exponents (sum_j s_j p^j) / 2 over the digit box of R."""
    out = []
    for digits in itertools.product(*(range(-r, r + 1, 2) for r in weights)):
        e = sum(s * p**j for j, s in enumerate(digits))
        if e % 2:  # impossible for even digit sum and odd p
            raise AssertionError("odd exponent in Brauer character expansion")
        out.append(e // 2)
    return out


def char_value(frame: CyclicFrame, chi: CharRestriction, cls: ClassLabel) -> CycSum:
    """Exact value of the restriction at the given class, as an order-m CycSum."""
    m, q, eps = frame.m, frame.ctx.q, frame.epsilon
    i = cls.exp
    if chi.kind == "trivial":
        return CycSum.integer(m, 1)
    if chi.kind in ("phi", "psi"):
        if chi.h % m == 0:
            raise ValueError(f"{chi.label} is not defined when the frame order divides h")
        if i % m == 0:
            return CycSum.integer(m, q + eps if chi.kind == "phi" else q - eps)
        if chi.kind == "psi":
            return CycSum.zero(m)
        return eps * (CycSum.root(m, chi.h * i) + CycSum.root(m, -chi.h * i))
    coeffs = [0] * m
    for e in _brauer_half_exponents(frame.ctx.p, chi.weights):
        coeffs[(i * e) % m] += 1
    return CycSum(m, coeffs)


def brauer_irreducibles(ctx: GroupContext, frame: CyclicFrame) -> tuple[CharRestriction, ...]:
    """All irreducible Brauer character restrictions mod p: length-f digit tuples, even sum."""
    if gcd(frame.m, ctx.p) != 1:
        raise ValueError("frame must be p-regular")
    out = []
    for weights in itertools.product(range(ctx.p), repeat=ctx.f):
        if sum(weights) % 2 == 0:
            out.append(CharRestriction.brauer(weights))
    return tuple(out)


def v_set_count(frame: CyclicFrame, weights, h: int) -> int:
    """|V_{R;h}|: nonzero digit tuples whose half exponent is +-h mod m."""
    weights = tuple(weights)
    if sum(weights) % 2:
        raise ValueError("chi_R requires an even digit sum")
    m = frame.m
    count = 0
    for digits in itertools.product(*(range(-r, r + 1, 2) for r in weights)):
        if not any(digits):
            continue
        e = sum(s * frame.ctx.p**j for j, s in enumerate(digits)) // 2
        if (e - h) % m == 0 or (e + h) % m == 0:
            count += 1
    return count


def v_pair_count(frame: CyclicFrame, weights, h: int) -> int:
    """n_h = |V_{R;h}| / 2; the set is closed under digit negation, so this is exact."""
    c = v_set_count(frame, weights, h)
    assert c % 2 == 0
    return c // 2


def decompose_chi(frame: CyclicFrame, weights) -> tuple[int, dict[int, int]]:
    """Coefficients (k_0, n_h) with chi_R = k_0 * 1 + eps * sum_h n_h (phi_h - psi_h).

    k_0 is 1 + 2 n_0 when every digit of R is even (the zero tuple then
    contributes the trivial character once), otherwise 2 n_0.
    """
    weights = tuple(weights)
    n0 = v_pair_count(frame, weights, 0)
    k0 = (1 if all(r % 2 == 0 for r in weights) else 0) + 2 * n0
    coeffs = {h: v_pair_count(frame, weights, h) for h in range(1, frame.m // 2 + 1)}
    return k0, coeffs

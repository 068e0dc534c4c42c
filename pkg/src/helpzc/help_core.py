"""Distributions of virtual partial augmentations and the HeLP constraint system.

A candidate distribution of order n assigns an integer eps_d(x) to every
divisor d of n and every class x of the cyclic frame, subject to

    (V1)  sum_x eps_d(x) = 1 for every d | n,
    (V2)  eps_d(1) = 0 for d != n,
    (V3)  eps_d(x) = 0 unless the order of x divides n / d,
    (V4)  for every character chi in play and every l, the eigenvalue
          multiplicity below is a nonnegative integer:

            mu(zeta_n^l) = (1/n) sum_x sum_{d|n} eps_d(x)
                           Tr_{Q(zeta_n^d)/Q}( chi(x) zeta_n^{-l d} ).

Conditions (V2), (V3) and eps_n(1) = 1 are baked into a variable layout;
each (chi, l) pair then becomes one integer row a.x + c with the two
requirements a.x + c >= 0 and a.x + c = 0 mod n, and c = chi(1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping

from .cyclotomic import CycSum, divisors, is_prime
from .psl2 import (
    CharRestriction,
    ClassLabel,
    CyclicFrame,
    char_value,
    make_context,
    make_frame,
)


class PADistribution:
    """An integer class-function family (eps_d)_{d | n} on the classes of a frame.

    Construction checks only structure (levels divide n, classes belong to
    the frame); the defining conditions (V1)-(V3) are reported by
    violations() so that invalid candidates can still be inspected.
    """

    def __init__(self, frame: CyclicFrame, levels: Mapping[int, Mapping[ClassLabel, int]]):
        n = frame.m
        cleaned: dict[int, dict[ClassLabel, int]] = {}
        valid = set(frame.classes())
        for d, row in levels.items():
            if d < 1 or n % d:
                raise ValueError(f"level {d} does not divide the order {n}")
            for cls, v in row.items():
                if cls not in valid:
                    raise ValueError(f"{cls} is not a class of the order-{n} frame")
                if v:
                    cleaned.setdefault(d, {})[cls] = int(v)
        self.frame = frame
        self._levels = cleaned

    @property
    def n(self) -> int:
        return self.frame.m

    @property
    def q(self) -> int:
        return self.frame.ctx.q

    def value(self, d: int, cls: ClassLabel) -> int:
        return self._levels.get(d, {}).get(cls, 0)

    def entries(self) -> Iterator[tuple[int, ClassLabel, int]]:
        """Nonzero entries (d, class, value), sorted by (d, exp)."""
        for d in sorted(self._levels):
            row = self._levels[d]
            for cls in sorted(row, key=lambda c: c.exp):
                yield d, cls, row[cls]

    def sort_key(self) -> tuple:
        return tuple((d, cls.exp, v) for d, cls, v in self.entries())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PADistribution):
            return NotImplemented
        return (self.q, self.n) == (other.q, other.n) and self.sort_key() == other.sort_key()

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.sort_key()))

    def __repr__(self) -> str:
        body = ", ".join(f"eps_{d}(g^{c.exp})={v}" for d, c, v in self.entries())
        return f"PADistribution(q={self.q}, n={self.n}, {body})"

    def violations(self) -> list[str]:
        """Human-readable list of broken (V1)/(V2)/(V3) conditions; empty if valid."""
        out = []
        n = self.n
        for d in divisors(n):
            total = sum(self.value(d, cls) for cls in self.frame.classes())
            if total != 1:
                out.append(f"V1: level d={d} sums to {total}, expected 1")
        for d, cls, v in self.entries():
            if d != n and cls.exp == 0:
                out.append(f"V2: eps_{d}(1) = {v}, expected 0")
            if (n // d) % cls.order:
                out.append(
                    f"V3: eps_{d} is nonzero at a class of order {cls.order}, "
                    f"which does not divide n/d = {n // d}"
                )
        return out

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "entries": [
                {"d": d, "order": cls.order, "exp": cls.exp, "value": v}
                for d, cls, v in self.entries()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> PADistribution:
        try:
            q = int(data["q"])
            n = int(data["n"])
            raw = list(data["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed distribution object: {exc}") from exc
        frame = make_frame(make_context(q), n)
        levels: dict[int, dict[ClassLabel, int]] = {}
        for item in raw:
            try:
                d, exp, v = int(item["d"]), int(item["exp"]), int(item["value"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"malformed distribution entry: {exc}") from exc
            label = frame.class_of(exp)
            if label.exp != exp:
                raise ValueError(f"exponent {exp} is not canonical for order {n}")
            if "order" in item and int(item["order"]) != label.order:
                raise ValueError(
                    f"entry order {item['order']} does not match class order {label.order}"
                )
            levels.setdefault(d, {})[label] = levels.setdefault(d, {}).get(label, 0) + v
        return cls(frame, levels)


@dataclass(frozen=True)
class VariableLayout:
    """The free unknowns after baking (V2), (V3) and eps_n(1) = 1 into the system."""

    frame: CyclicFrame
    variables: tuple[tuple[int, ClassLabel], ...]

    def __len__(self) -> int:
        return len(self.variables)

    def index(self, d: int, cls: ClassLabel) -> int:
        return self.variables.index((d, cls))

    def level_indices(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, (d, _cls) in enumerate(self.variables):
            out.setdefault(d, []).append(i)
        return {d: tuple(v) for d, v in out.items()}


def variable_layout(frame: CyclicFrame) -> VariableLayout:
    n = frame.m
    variables = []
    for d in divisors(n):
        if d == n:
            continue
        for cls in frame.classes_of_order_dividing(n // d):
            if cls.exp:
                variables.append((d, cls))
    return VariableLayout(frame=frame, variables=tuple(variables))


def distribution_from_vector(layout: VariableLayout, values: Iterable[int]) -> PADistribution:
    """Rebuild a full distribution from layout values plus the fixed eps_n(1) = 1."""
    frame = layout.frame
    levels: dict[int, dict[ClassLabel, int]] = {frame.m: {frame.identity: 1}}
    for (d, cls), v in zip(layout.variables, values):
        if v:
            levels.setdefault(d, {})[cls] = v
    return PADistribution(frame, levels)


@dataclass(frozen=True)
class ConstraintRow:
    """One (character, eigenvalue index) row: n * mu = coeffs . x + const.

    The row demands coeffs . x + const >= 0 and = 0 mod n; const equals
    chi(1) (the contribution of the fixed eps_n(1) = 1), and the upper
    bound n * chi(1) follows from the multiplicities summing to chi(1).
    """

    character: str
    l: int
    coeffs: tuple[int, ...]
    const: int
    upper: int


@dataclass(frozen=True)
class ConstraintSystem:
    frame: CyclicFrame
    layout: VariableLayout
    rows: tuple[ConstraintRow, ...]
    characters: tuple[CharRestriction, ...]
    family: str = "custom"

    @property
    def n(self) -> int:
        return self.frame.m


def _row_coefficient(
    frame: CyclicFrame, value: CycSum, d: int, l: int
) -> int:
    """Tr_{Q(zeta_n^d)/Q}( chi(x) * zeta_n^{-l d} ) for a cached chi(x)."""
    n = frame.m
    return value.mul_root((-l * d) % n).descend(d).trace()


def build_constraints(
    frame: CyclicFrame,
    characters: Iterable[CharRestriction],
    layout: VariableLayout | None = None,
    family: str = "custom",
) -> ConstraintSystem:
    characters = tuple(characters)
    layout = layout if layout is not None else variable_layout(frame)
    n = frame.m
    rows = []
    for chi in characters:
        deg = chi.degree(frame)
        cached = {cls: char_value(frame, chi, cls) for _d, cls in layout.variables}
        for l in range(n):
            coeffs = tuple(
                _row_coefficient(frame, cached[cls], d, l) for d, cls in layout.variables
            )
            rows.append(
                ConstraintRow(character=chi.label, l=l, coeffs=coeffs, const=deg, upper=n * deg)
            )
    return ConstraintSystem(
        frame=frame, layout=layout, rows=tuple(rows), characters=characters, family=family
    )


def multiplicity(pa: PADistribution, chi: CharRestriction, l: int) -> Fraction:
    """Exact eigenvalue multiplicity mu(zeta_n^l) for the candidate distribution.

    For members of VPA_n this is a nonnegative integer for every actual
    ordinary or Brauer character; here it is returned as an exact rational
    so that failures are visible.
    """
    n = pa.n
    total = 0
    for d, cls, v in pa.entries():
        value = char_value(pa.frame, chi, cls)
        total += v * _row_coefficient(pa.frame, value, d, l)
    return Fraction(total, n)


def mu_minus(pa: PADistribution, chi: CharRestriction, m: int) -> Fraction:
    """The partial multiplicity sum over divisors d with m | d (no root twist)."""
    n = pa.n
    if m < 1 or n % m:
        raise ValueError(f"{m} does not divide the order {n}")
    total = 0
    for d, cls, v in pa.entries():
        if d % m == 0:
            total += v * char_value(pa.frame, chi, cls).descend(d).trace()
    return Fraction(total, n)


def power_distribution(pa: PADistribution, m: int) -> PADistribution:
    """The induced distribution of the (n/m)-th power, on the order-m subframe."""
    n = pa.n
    if m < 1 or n % m:
        raise ValueError(f"{m} does not divide the order {n}")
    k = n // m
    sub = make_frame(pa.frame.ctx, m)
    levels: dict[int, dict[ClassLabel, int]] = {}
    for d in divisors(m):
        row = {}
        for cls in pa.frame.classes():
            v = pa.value(d * k, cls)
            if v:
                if cls.exp % k:
                    raise ValueError("distribution breaks (V3); cannot take powers")
                target = sub.class_of(cls.exp // k)
                row[target] = row.get(target, 0) + v
        if row:
            levels[d] = row
    return PADistribution(sub, levels)


def char_at_distribution(pa: PADistribution, chi: CharRestriction, d: int) -> CycSum:
    """The formal character value sum_x eps_d(x) chi(x) at level d."""
    total = CycSum.zero(pa.n)
    for level, cls, v in pa.entries():
        if level == d:
            total = total + v * char_value(pa.frame, chi, cls)
    return total


def accumulated(pa: PADistribution, d: int, order: int) -> int:
    """Accumulated augmentation: sum of eps_d over classes of order exactly `order`."""
    return sum(v for lvl, cls, v in pa.entries() if lvl == d and cls.order == order)


def tpa_distribution(frame: CyclicFrame, exp: int) -> PADistribution:
    """The distribution of an actual group element g0^exp of full frame order."""
    n = frame.m
    if frame.class_of(exp).order != n:
        raise ValueError(f"exponent {exp} does not have order {n}")
    levels = {d: {frame.class_of(exp * d): 1} for d in divisors(n)}
    return PADistribution(frame, levels)


@dataclass(frozen=True)
class SolutionSet:
    """A duplicate-free, canonically sorted collection of distributions."""

    distributions: tuple[PADistribution, ...]
    family: str = ""

    @classmethod
    def build(cls, items: Iterable[PADistribution], family: str = "") -> SolutionSet:
        unique = {pa.sort_key(): pa for pa in items}
        ordered = tuple(unique[k] for k in sorted(unique))
        return cls(distributions=ordered, family=family)

    def __len__(self) -> int:
        return len(self.distributions)

    def __iter__(self) -> Iterator[PADistribution]:
        return iter(self.distributions)

    def __contains__(self, pa: object) -> bool:
        return any(pa == other for other in self.distributions)


def tpa_set(frame: CyclicFrame) -> SolutionSet:
    """One distribution per conjugacy class of elements of full frame order."""
    n = frame.m
    exps = [cls.exp for cls in frame.classes() if cls.order == n]
    return SolutionSet.build((tpa_distribution(frame, e) for e in exps), family="tpa")


def exceptional(frame: CyclicFrame, t: int, g0exp: int = 1) -> PADistribution:
    """The exceptional order-2t distribution attached to the class of g0^g0exp.

    At level 1 it places +1 on the classes of g^((t-1)/2) and g^((t+1)/2)
    and -1 on the class of g^(t-1); the other levels look like a genuine
    group element.  Defined for odd primes t >= 5 only.
    """
    if not is_prime(t) or t % 2 == 0:
        raise ValueError("t must be an odd prime")
    if t == 3:
        raise ValueError("exceptional distribution requires t >= 5")
    n = 2 * t
    if frame.m != n:
        raise ValueError(f"frame order {frame.m} is not 2t = {n}")
    if frame.class_of(g0exp).order != n:
        raise ValueError(f"exponent {g0exp} does not have order {n}")

    def cls(j: int) -> ClassLabel:
        return frame.class_of(g0exp * j)

    levels = {
        n: {frame.identity: 1},
        t: {cls(t): 1},
        2: {cls(2): 1},
        1: {cls((t - 1) // 2): 1, cls((t + 1) // 2): 1, cls(t - 1): -1},
    }
    return PADistribution(frame, levels)


def exceptional_set(frame: CyclicFrame, t: int) -> SolutionSet:
    """One exceptional distribution per class of order-2t elements."""
    n = 2 * t
    exps = [cls.exp for cls in frame.classes() if cls.order == n]
    return SolutionSet.build((exceptional(frame, t, e) for e in exps), family="exceptional")


def relabel(pa: PADistribution, c: int) -> PADistribution:
    """Frame automorphism: rewrite every class key g0^i as g0^(c i)."""
    n = pa.n
    if gcd(c, n) != 1:
        raise ValueError(f"{c} is not coprime to the order {n}")
    levels: dict[int, dict[ClassLabel, int]] = {}
    for d, cls, v in pa.entries():
        target = pa.frame.class_of(c * cls.exp)
        levels.setdefault(d, {})[target] = levels.setdefault(d, {}).get(target, 0) + v
    return PADistribution(pa.frame, levels)


@dataclass(frozen=True)
class MultiplicityCheck:
    character: str
    l: int
    value: Fraction
    ok: bool


@dataclass(frozen=True)
class V4Report:
    checks: tuple[MultiplicityCheck, ...]
    ok: bool = field(default=False)

    @classmethod
    def build(cls, checks: Iterable[MultiplicityCheck]) -> V4Report:
        checks = tuple(checks)
        return cls(checks=checks, ok=all(c.ok for c in checks))


def verify_v4(pa: PADistribution, characters: Iterable[CharRestriction]) -> V4Report:
    """Evaluate every multiplicity and report whether each is a nonnegative integer."""
    checks = []
    for chi in characters:
        for l in range(pa.n):
            mu = multiplicity(pa, chi, l)
            ok = mu >= 0 and mu.denominator == 1
            checks.append(MultiplicityCheck(character=chi.label, l=l, value=mu, ok=ok))
    return V4Report.build(checks)


def check_wagner(pa: PADistribution, r: int, t: int) -> bool:
    """Divisibility of the accumulated level-1 augmentations at the prime orders."""
    if not (is_prime(r) and is_prime(t)) or r == t or pa.n != r * t:
        raise ValueError("requires n = r * t for distinct primes r and t")
    return accumulated(pa, 1, t) % t == 0 and accumulated(pa, 1, r) % r == 0


def mu1_accumulated_form(
    pa: PADistribution, chi: CharRestriction, r: int, t: int
) -> Fraction:
    """Closed form for mu(1) from the accumulated level-1 augmentations.

    Requires n = r t with the levels r and t concentrated on a single class
    of order t resp. r with value 1; traces of equal-order classes agree,
    which collapses the level-1 sum to the three accumulated values.
    """
    n = pa.n
    if not (is_prime(r) and is_prime(t)) or r == t or n != r * t:
        raise ValueError("requires n = r * t for distinct primes r and t")
    level_r = [(cls, v) for d, cls, v in pa.entries() if d == r]
    level_t = [(cls, v) for d, cls, v in pa.entries() if d == t]
    if len(level_r) != 1 or level_r[0][1] != 1 or level_r[0][0].order != t:
        raise ValueError("level r is not concentrated on one order-t class with value 1")
    if len(level_t) != 1 or level_t[0][1] != 1 or level_t[0][0].order != r:
        raise ValueError("level t is not concentrated on one order-r class with value 1")
    cls_t = level_r[0][0]
    cls_r = level_t[0][0]
    cls_rt = pa.frame.class_of(1)

    def big(cls: ClassLabel) -> int:
        return char_value(pa.frame, chi, cls).trace()

    t_sub_t = char_value(pa.frame, chi, cls_t).descend(r).trace()
    t_sub_r = char_value(pa.frame, chi, cls_r).descend(t).trace()
    total = (
        accumulated(pa, 1, n) * big(cls_rt)
        + accumulated(pa, 1, t) * big(cls_t)
        + accumulated(pa, 1, r) * big(cls_r)
        + t_sub_r
        + t_sub_t
        + chi.degree(pa.frame)
    )
    return Fraction(total, n)

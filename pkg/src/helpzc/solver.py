"""Complete enumeration of the integer solutions of a HeLP constraint system.

The pipeline is: check that the character rows have full column rank
(otherwise the linear relaxation is unbounded), bound every variable by
exact rational linear programming, then run a depth-first search over the
integer box with interval propagation and the mod-n congruence of each
fully assigned row.  Everything is exact; the search either finishes with
the complete solution set or fails loudly when the node budget runs out.

The per-variable LPs are solved through the dual: the primal has few
variables and hundreds of rows, so the dual tableau has one row per
primal variable and stays tiny.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .help_core import (
    ConstraintSystem,
    PADistribution,
    SolutionSet,
    build_constraints,
    distribution_from_vector,
    variable_layout,
)
from .psl2 import CharRestriction, CyclicFrame, brauer_irreducibles

DEFAULT_NODE_BUDGET = 10_000_000


class SearchIncomplete(Exception):
    """The node budget was exhausted before the search space was covered."""

    def __init__(self, node_count: int, budget: int):
        super().__init__(
            f"enumeration incomplete: node budget {budget} exhausted after "
            f"{node_count} nodes"
        )
        self.node_count = node_count
        self.budget = budget

    def __reduce__(self):
        # keeps the exception picklable across worker pool boundaries
        return (SearchIncomplete, (self.node_count, self.budget))


class RankDeficientError(ValueError):
    """The relaxation is unbounded; the character family must be extended."""


@dataclass(frozen=True)
class BoundsBox:
    """Per-variable closed integer intervals enclosing the LP relaxation."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]
    feasible: bool = True

    def volume(self) -> int:
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= max(0, b - a + 1)
        return out


@dataclass(frozen=True)
class EnumerationReport:
    solutions: SolutionSet
    node_count: int
    bounds: BoundsBox
    rank: int
    family: str
    complete: bool


@dataclass(frozen=True)
class SetDiff:
    only_found: tuple[PADistribution, ...]
    only_expected: tuple[PADistribution, ...]

    @property
    def equal(self) -> bool:
        return not self.only_found and not self.only_expected


def compare_sets(found: SolutionSet, expected: SolutionSet) -> SetDiff:
    """Symmetric difference by canonical form; both sets must share (q, n)."""

    def keyed(ss: SolutionSet) -> dict:
        return {pa.sort_key(): pa for pa in ss}

    fk, ek = keyed(found), keyed(expected)
    frames = {(pa.q, pa.n) for pa in found} | {(pa.q, pa.n) for pa in expected}
    if len(frames) > 1:
        raise ValueError("solution sets live on different (q, n)")
    return SetDiff(
        only_found=tuple(fk[k] for k in sorted(fk.keys() - ek.keys())),
        only_expected=tuple(ek[k] for k in sorted(ek.keys() - fk.keys())),
    )


# ------------------------------------------------------------------ rank


def rank_check(system: ConstraintSystem) -> int:
    """Exact rank over Q of the stacked row coefficient matrix."""
    rows = [list(map(Fraction, r.coeffs)) for r in system.rows]
    nvars = len(system.layout)
    rank = 0
    col = 0
    while col < nvars and rank < len(rows):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        rows[rank] = [x * inv for x in prow]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ------------------------------------------------------------------ exact LP


def _simplex_min(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """min c.y subject to A y = b, y >= 0, by two-phase tableau simplex.

    Bland's rule everywhere, so cycling cannot occur.  Returns
    ("optimal", value), ("infeasible", None) or ("unbounded", None).
    """
    m = len(A)
    nreal = len(c)
    T: list[list[Fraction]] = []
    for i in range(m):
        row = list(A[i])
        rhs = b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = list(range(nreal, nreal + m))

    def pivot(r: int, col: int, z: list[Fraction]) -> None:
        piv = T[r][col]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][col]:
                f = T[i][col]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        if z[col]:
            f = z[col]
            z[:] = [x - f * y for x, y in zip(z, T[r])]
        basis[r] = col

    def reduced_costs(cost: list[Fraction]) -> list[Fraction]:
        z = list(cost) + [Fraction(0)] * (len(T[0]) - len(cost))
        for r, bv in enumerate(basis):
            if z[bv]:
                f = z[bv]
                z = [x - f * y for x, y in zip(z, T[r])]
        return z

    def optimize(z: list[Fraction]) -> str:
        while True:
            col = next((j for j in range(nreal) if z[j] < 0), None)
            if col is None:
                return "optimal"
            best = None
            for i in range(m):
                a = T[i][col]
                if a > 0:
                    key = (T[i][-1] / a, basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            pivot(best[1], col, z)

    # phase 1: minimize the artificial sum
    z1 = reduced_costs([Fraction(0)] * nreal + [Fraction(1)] * m)
    optimize(z1)
    if -z1[-1] != 0:
        return "infeasible", None
    # drive leftover artificials out of the basis; drop redundant rows
    for r in range(m - 1, -1, -1):
        if basis[r] >= nreal:
            col = next((j for j in range(nreal) if T[r][j]), None)
            if col is None:
                del T[r]
                del basis[r]
                m -= 1
            else:
                pivot(r, col, z1)

    z2 = reduced_costs(list(c))
    status = optimize(z2)
    if status == "unbounded":
        return "unbounded", None
    return "optimal", -z2[-1]


def _relaxation_rows(system: ConstraintSystem) -> tuple[list[tuple[int, ...]], list[int]]:
    """All inequalities g.x <= h of the relaxation, deduplicated.

    Each constraint row contributes both sides of 0 <= a.x + c <= upper;
    each (V1) level equation contributes both directions of sum = 1.
    """
    seen: set[tuple[tuple[int, ...], int]] = set()
    G: list[tuple[int, ...]] = []
    h: list[int] = []

    def push(g: tuple[int, ...], rhs: int) -> None:
        key = (g, rhs)
        if key not in seen:
            seen.add(key)
            G.append(g)
            h.append(rhs)

    for row in system.rows:
        if any(row.coeffs):
            neg = tuple(-a for a in row.coeffs)
            push(neg, row.const)
            push(row.coeffs, row.upper - row.const)
    nvars = len(system.layout)
    for _d, idxs in sorted(system.layout.level_indices().items()):
        g = tuple(1 if i in idxs else 0 for i in range(nvars))
        push(g, 1)
        push(tuple(-x for x in g), -1)
    return G, h


def derive_bounds(system: ConstraintSystem) -> BoundsBox:
    """Exact per-variable LP bounds of the relaxation, rounded inward.

    The LPs are solved through the dual (min h.y, G^T y = w, y >= 0):
    an infeasible dual means the primal direction is unbounded, which is
    exactly the rank-deficient situation; an unbounded dual means the
    relaxation itself is empty.
    """
    nvars = len(system.layout)
    if nvars == 0:
        return BoundsBox(lo=(), hi=(), feasible=True)
    G, h = _relaxation_rows(system)
    A = [[Fraction(G[j][i]) for j in range(len(G))] for i in range(nvars)]
    cost = [Fraction(x) for x in h]
    lo = []
    hi = []
    for i in range(nvars):
        for sense in (1, -1):
            b = [Fraction(sense if j == i else 0) for j in range(nvars)]
            status, value = _simplex_min([row[:] for row in A], b, cost)
            if status == "infeasible":
                raise RankDeficientError(
                    "unbounded relaxation: augment the character family"
                )
            if status == "unbounded":
                return BoundsBox(lo=(0,) * nvars, hi=(-1,) * nvars, feasible=False)
            if sense == 1:
                hi.append(floor(value))
            else:
                lo.append(-floor(value))
    for a, b in zip(lo, hi):
        if a > b:
            return BoundsBox(lo=(0,) * nvars, hi=(-1,) * nvars, feasible=False)
    return BoundsBox(lo=tuple(lo), hi=tuple(hi), feasible=True)


# ------------------------------------------------------------------ search


@dataclass(frozen=True)
class _Condition:
    """lo <= const + coeffs.x <= hi, optionally const + coeffs.x = 0 mod n."""

    coeffs: tuple[int, ...]
    const: int
    lo: int
    hi: int
    modn: bool


def _conditions(system: ConstraintSystem) -> list[_Condition] | None:
    """Search conditions; None when a constant row is already violated."""
    n = system.n
    seen = set()
    conds: list[_Condition] = []
    for row in system.rows:
        if not any(row.coeffs):
            ok = 0 <= row.const <= row.upper and row.const % n == 0
            if not ok:
                return None
            continue
        key = (row.coeffs, row.const, row.upper)
        if key in seen:
            continue
        seen.add(key)
        conds.append(
            _Condition(coeffs=row.coeffs, const=row.const, lo=0, hi=row.upper, modn=True)
        )
    nvars = len(system.layout)
    for _d, idxs in sorted(system.layout.level_indices().items()):
        coeffs = tuple(1 if i in idxs else 0 for i in range(nvars))
        conds.append(_Condition(coeffs=coeffs, const=0, lo=1, hi=1, modn=False))
    return conds


def _value_order(lo: int, hi: int) -> list[int]:
    """Candidate values from the interval midpoint outward."""
    mid = (lo + hi) // 2
    out = [mid]
    step = 1
    while True:
        grew = False
        if mid + step <= hi:
            out.append(mid + step)
            grew = True
        if mid - step >= lo:
            out.append(mid - step)
            grew = True
        if not grew:
            return out
        step += 1


def _search(system: ConstraintSystem, box: BoundsBox, first_values, budget: int):
    """Depth-first enumeration; returns (solution vectors, node count)."""
    n = system.n
    nvars = len(system.layout)
    conds = _conditions(system)
    if conds is None or not box.feasible:
        return [], 0
    if nvars == 0:
        return [()], 0

    ncond = len(conds)
    last_var = [max(i for i, a in enumerate(c.coeffs) if a) for c in conds]
    # static suffix ranges of sum_{j >= k} a_j x_j over the box
    sufmin = [[0] * (nvars + 1) for _ in range(ncond)]
    sufmax = [[0] * (nvars + 1) for _ in range(ncond)]
    for ci, cond in enumerate(conds):
        for k in range(nvars - 1, -1, -1):
            a = cond.coeffs[k]
            terms = (a * box.lo[k], a * box.hi[k])
            sufmin[ci][k] = sufmin[ci][k + 1] + min(terms)
            sufmax[ci][k] = sufmax[ci][k + 1] + max(terms)
    touches = [
        [(ci, conds[ci].coeffs[k]) for ci in range(ncond) if conds[ci].coeffs[k]]
        for k in range(nvars)
    ]
    values = [
        _value_order(lo, hi) if k > 0 or first_values is None else list(first_values)
        for k, (lo, hi) in enumerate(zip(box.lo, box.hi))
    ]

    partial = [c.const for c in conds]
    point = [0] * nvars
    solutions: list[tuple[int, ...]] = []
    nodes = 0

    def descend(k: int) -> None:
        nonlocal nodes
        if k == nvars:
            solutions.append(tuple(point))
            return
        for v in values[k]:
            nodes += 1
            if nodes > budget:
                raise SearchIncomplete(nodes, budget)
            ok = True
            for ci, a in touches[k]:
                s = partial[ci] + a * v
                cond = conds[ci]
                if last_var[ci] == k:
                    if s < cond.lo or s > cond.hi or (cond.modn and s % n):
                        ok = False
                        break
                else:
                    if s + sufmax[ci][k + 1] < cond.lo or s + sufmin[ci][k + 1] > cond.hi:
                        ok = False
                        break
            if not ok:
                continue
            point[k] = v
            for ci, a in touches[k]:
                partial[ci] += a * v
            descend(k + 1)
            for ci, a in touches[k]:
                partial[ci] -= a * v

    descend(0)
    return solutions, nodes


def _search_chunk(args):
    system, box, chunk, budget = args
    return _search(system, box, chunk, budget)


def enumerate_solutions(
    system: ConstraintSystem,
    box: BoundsBox,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> EnumerationReport:
    """All integer points of the box satisfying every row and level equation.

    Complete and duplicate free; deterministic regardless of worker count.
    Raises SearchIncomplete instead of silently truncating when the budget
    is exhausted.
    """
    nvars = len(system.layout)
    if workers > 1 and nvars > 0 and box.feasible:
        first = _value_order(box.lo[0], box.hi[0])
        chunks = [first[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        with multiprocessing.Pool(len(chunks)) as pool:
            parts = pool.map(
                _search_chunk, [(system, box, c, node_budget) for c in chunks]
            )
        vectors = [v for sols, _n in parts for v in sols]
        nodes = sum(n for _sols, n in parts)
    else:
        vectors, nodes = _search(system, box, None, node_budget)
    dists = (distribution_from_vector(system.layout, v) for v in vectors)
    solutions = SolutionSet.build(dists, family=system.family)
    rank = rank_check(system)
    return EnumerationReport(
        solutions=solutions,
        node_count=nodes,
        bounds=box,
        rank=rank,
        family=system.family,
        complete=rank == nvars,
    )


# ------------------------------------------------------------------ presets


def character_family(
    frame: CyclicFrame, spec: str = "paper"
) -> tuple[tuple[CharRestriction, ...], str]:
    """Resolve a character family preset id to an explicit character list.

    "paper"      trivial, chi_2, chi_4, phi_1 .. phi_(n/2), psi_1
    "brauer-p"   every irreducible Brauer restriction mod p
    "brauer-p:D" the same, filtered to degree <= D
    """
    ctx = frame.ctx
    n = frame.m
    if spec == "paper":
        if n == 1:
            return (CharRestriction.trivial(),), "paper"
        chars = [CharRestriction.trivial(), CharRestriction.brauer((2,))]
        if ctx.p >= 5:
            # chi_4 needs digits below p; for p = 3 the irreducible family
            # added on rank deficiency covers for it
            chars.append(CharRestriction.brauer((4,)))
        chars.extend(CharRestriction.phi(h) for h in range(1, n // 2 + 1))
        chars.append(CharRestriction.psi(1))
        return tuple(chars), "paper"
    if spec == "brauer-p":
        return brauer_irreducibles(ctx, frame), "brauer-p"
    if spec.startswith("brauer-p:"):
        bound = int(spec.split(":", 1)[1])
        chars = tuple(
            chi for chi in brauer_irreducibles(ctx, frame) if chi.degree(frame) <= bound
        )
        return chars, spec
    raise ValueError(f"unknown character family {spec!r}")


def solve_vpa(
    frame: CyclicFrame,
    chars: str | tuple[CharRestriction, ...] = "paper",
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
    family: str | None = None,
) -> EnumerationReport:
    """Full pipeline: build rows, ensure full rank, bound, enumerate.

    On rank deficiency the family is extended once with the irreducible
    Brauer characters mod p before giving up.
    """
    if isinstance(chars, str):
        characters, family = character_family(frame, chars)
    else:
        characters, family = tuple(chars), (family or "custom")
    layout = variable_layout(frame)
    system = build_constraints(frame, characters, layout, family)
    rank = rank_check(system)
    if rank < len(layout):
        extra = tuple(
            chi for chi in brauer_irreducibles(frame.ctx, frame) if chi not in characters
        )
        if extra:
            characters = characters + extra
            family = f"{family}+brauer-p"
            system = build_constraints(frame, characters, layout, family)
            rank = rank_check(system)
        if rank < len(layout):
            raise RankDeficientError("unbounded relaxation: augment the character family")
    box = derive_bounds(system)
    return enumerate_solutions(system, box, node_budget=node_budget, workers=workers)

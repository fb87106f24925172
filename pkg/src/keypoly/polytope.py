"""Exact convex-hull membership and lattice point enumeration.

A polytope is given as the convex hull of finitely many integer generator
points (a lattice V-representation).  Membership of a rational point p is
the feasibility of the system

    lambda >= 0,  sum lambda_s = 1,  sum lambda_s * s = p,

decided by a phase-1 simplex over ``fractions.Fraction``.  Bland's
smallest-index pivoting rule rules out cycling, so the method terminates,
and with exact arithmetic every answer is reproducible bit for bit.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import SparsePolynomial

__all__ = [
    "VPolytope",
    "newton_polytope",
    "contains",
    "lattice_points",
    "snp_check",
    "polytope_subset",
    "polytope_equal",
]


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a nonempty set of integer points in Z^n."""

    n: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a polytope needs at least one generator")
        for g in self.generators:
            if len(g) != self.n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {self.n}")

    @classmethod
    def from_points(cls, n: int, points: Iterable[Sequence[int]]) -> VPolytope:
        return cls(n, tuple(sorted({tuple(p) for p in points})))


def newton_polytope(f: SparsePolynomial) -> VPolytope:
    """Convex hull of the exponent vectors of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return VPolytope.from_points(f.n, f.exponents())


def contains(p: VPolytope, point: Sequence[int | Fraction]) -> bool:
    """Exact test whether point is a convex combination of the generators."""
    if len(point) != p.n:
        raise ValueError(f"point length {len(point)} does not match dimension {p.n}")
    q = tuple(Fraction(x) for x in point)
    # Cheap exact rejections: the hull lies inside the coordinate box, and
    # when all generators share a coordinate sum, inside that hyperplane.
    for k in range(p.n):
        coords = [g[k] for g in p.generators]
        if not min(coords) <= q[k] <= max(coords):
            return False
    sums = {sum(g) for g in p.generators}
    if len(sums) == 1 and sum(q) != next(iter(sums)):
        return False
    if all(x.denominator == 1 for x in q) and tuple(int(x) for x in q) in set(p.generators):
        return True
    return _convex_feasible(p.generators, q)


def _convex_feasible(generators: Sequence[tuple[int, ...]], point: tuple[Fraction, ...]) -> bool:
    """Phase-1 simplex with Bland's rule on the convex combination system."""
    n = len(point)
    num_vars = len(generators)
    m = n + 1  # one convexity row plus one row per coordinate
    # Equality rows [A | b]: row 0 is sum lambda = 1, row k is coordinate k.
    rows: list[list[Fraction]] = []
    for r in range(m):
        if r == 0:
            coeffs = [Fraction(1)] * num_vars
            rhs = Fraction(1)
        else:
            coeffs = [Fraction(g[r - 1]) for g in generators]
            rhs = point[r - 1]
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        rows.append(coeffs + [rhs])

    # Tableau columns: num_vars originals, m artificials, then the rhs.
    width = num_vars + m + 1
    tableau = []
    for r, row in enumerate(rows):
        t = row[:-1] + [Fraction(0)] * m + [row[-1]]
        t[num_vars + r] = Fraction(1)
        tableau.append(t)
    basis = [num_vars + r for r in range(m)]

    # Phase-1 objective: minimize the artificial sum.  Reduced cost row,
    # with the rhs cell holding minus the current objective value.
    obj = [Fraction(0)] * width
    for c in range(num_vars):
        obj[c] = -sum(tableau[r][c] for r in range(m))
    obj[-1] = -sum(tableau[r][-1] for r in range(m))

    while True:
        enter = next((c for c in range(num_vars + m) if obj[c] < 0), None)
        if enter is None:
            return obj[-1] == 0
        leave = None
        best: Fraction | None = None
        for r in range(m):
            coeff = tableau[r][enter]
            if coeff > 0:
                ratio = tableau[r][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        assert leave is not None, "phase-1 objective is bounded below"
        _pivot(tableau, obj, leave, enter)
        basis[leave] = enter


def _pivot(tableau: list[list[Fraction]], obj: list[Fraction], row: int, col: int) -> None:
    pivot_row = tableau[row]
    inv = 1 / pivot_row[col]
    tableau[row] = [x * inv for x in pivot_row]
    pivot_row = tableau[row]
    for r, other in enumerate(tableau):
        if r != row and other[col]:
            factor = other[col]
            tableau[r] = [x - factor * y for x, y in zip(other, pivot_row)]
    if obj[col]:
        factor = obj[col]
        obj[:] = [x - factor * y for x, y in zip(obj, pivot_row)]


def lattice_points(p: VPolytope) -> set[tuple[int, ...]]:
    """All integer points of the hull.

    Candidates are drawn from the per-coordinate min/max box; when every
    generator has the same coordinate sum the search is further cut to
    that hyperplane.  Each candidate is then settled by ``contains``.
    """
    mins = [min(g[k] for g in p.generators) for k in range(p.n)]
    maxs = [max(g[k] for g in p.generators) for k in range(p.n)]
    sums = {sum(g) for g in p.generators}
    target = next(iter(sums)) if len(sums) == 1 else None

    found: set[tuple[int, ...]] = set()

    def scan(k: int, prefix: list[int], remaining: int | None) -> None:
        if k == p.n:
            candidate = tuple(prefix)
            if contains(p, candidate):
                found.add(candidate)
            return
        lo, hi = mins[k], maxs[k]
        if remaining is not None:
            tail_lo = sum(mins[k + 1:])
            tail_hi = sum(maxs[k + 1:])
            lo = max(lo, remaining - tail_hi)
            hi = min(hi, remaining - tail_lo)
        for x in range(lo, hi + 1):
            prefix.append(x)
            scan(k + 1, prefix, None if remaining is None else remaining - x)
            prefix.pop()

    scan(0, [], target)
    return found


def snp_check(f: SparsePolynomial) -> bool:
    """Whether every lattice point of Newton(f) is an exponent vector of f."""
    exps = f.exponents()
    if not exps:
        return True
    return lattice_points(VPolytope.from_points(f.n, exps)) == exps


def polytope_subset(p: VPolytope, q: VPolytope) -> bool:
    """Generator-wise inclusion: every generator of p lies in q."""
    if p.n != q.n:
        raise ValueError(f"dimensions differ: {p.n} vs {q.n}")
    return all(contains(q, g) for g in p.generators)


def polytope_equal(p: VPolytope, q: VPolytope) -> bool:
    """Double generator-wise inclusion."""
    return polytope_subset(p, q) and polytope_subset(q, p)

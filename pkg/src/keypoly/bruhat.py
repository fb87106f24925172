"""Bruhat order on permutations and interval polytopes.

Permutations of [n] are stored in one-line notation as tuples.  The order
test uses the rank-matrix criterion: u <= v iff for every prefix length i
and threshold j, the prefix of u holds at most as many values >= j as the
prefix of v does.  Intervals are computed by filtering all of S_n, which
is fine at the small n this package targets (n <= 6 or so).
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations

from .polynomial import exponent_vectors, key_polynomial
from .polytope import VPolytope, polytope_equal

__all__ = [
    "check_permutation",
    "inversions",
    "longest_element",
    "bruhat_leq",
    "bruhat_interval",
    "interval_polytope",
    "verify_qww0",
]


def check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    t = tuple(w)
    if sorted(t) != list(range(1, len(t) + 1)):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t}")
    return t


def inversions(w: Sequence[int]) -> int:
    t = check_permutation(w)
    return sum(1 for a in range(len(t)) for b in range(a + 1, len(t)) if t[a] > t[b])


def longest_element(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Rank-matrix comparison of two permutations of the same [n]."""
    a = check_permutation(u)
    b = check_permutation(v)
    if len(a) != len(b):
        raise ValueError(f"sizes differ: {len(a)} vs {len(b)}")
    n = len(a)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cu = sum(1 for k in range(i) if a[k] >= j)
            cv = sum(1 for k in range(i) if b[k] >= j)
            if cu > cv:
                return False
    return True


def bruhat_interval(u: Sequence[int], v: Sequence[int]) -> set[tuple[int, ...]]:
    """All w with u <= w <= v, by filtering S_n."""
    a = check_permutation(u)
    b = check_permutation(v)
    if not bruhat_leq(a, b):
        raise ValueError(f"{a} is not below {b} in Bruhat order")
    return {
        w
        for w in permutations(range(1, len(a) + 1))
        if bruhat_leq(a, w) and bruhat_leq(w, b)
    }


def interval_polytope(u: Sequence[int], v: Sequence[int]) -> VPolytope:
    """Convex hull of the one-line notations in the interval [u, v]."""
    interval = bruhat_interval(u, v)
    return VPolytope.from_points(len(tuple(u)), interval)


def verify_qww0(w: Sequence[int]) -> bool:
    """Whether Newton(key_polynomial(w)) equals the interval polytope from
    w up to the longest element, with w read as a composition."""
    t = check_permutation(w)
    n = len(t)
    newton = VPolytope.from_points(n, exponent_vectors(key_polynomial(t)))
    return polytope_equal(newton, interval_polytope(t, longest_element(n)))

"""Diagrams in an n x n grid, stored as ordered lists of column sets.

Rows are numbered 1..n top to bottom and columns 1..n left to right; the
box in row i of column j is present exactly when i is in the j-th column
set.  Column sets are kept as sorted tuples so that the columnwise order
(equal sizes, k-th smallest elements compared entrywise) is a zip-compare
and diagrams hash cheaply.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

__all__ = [
    "Diagram",
    "skyline",
    "subset_leq",
    "diagram_leq",
    "lower_subsets",
    "enumerate_lower_diagrams",
    "monomial_of_diagram",
]


@dataclass(frozen=True)
class Diagram:
    """n and one sorted tuple of row indices per column."""

    n: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.columns) != self.n:
            raise ValueError(f"expected {self.n} columns, got {len(self.columns)}")
        for col in self.columns:
            if any(not 1 <= r <= self.n for r in col):
                raise ValueError(f"row index out of range 1..{self.n} in column {col}")
            if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
                raise ValueError(f"column {col} is not strictly increasing")

    @classmethod
    def make(cls, n: int, columns: Iterable[Iterable[int]]) -> Diagram:
        """Build from arbitrary iterables, sorting and deduplicating rows."""
        return cls(n, tuple(tuple(sorted(set(col))) for col in columns))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes (row, col), column by column."""
        for j, col in enumerate(self.columns, start=1):
            for i in col:
                yield (i, j)

    def box_count(self) -> int:
        return sum(len(col) for col in self.columns)

    def has_box(self, row: int, col: int) -> bool:
        return 1 <= col <= self.n and row in self.columns[col - 1]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "columns": [list(col) for col in self.columns]}

    @classmethod
    def from_json_dict(cls, data) -> Diagram:
        return cls.make(data["n"], data["columns"])


def skyline(alpha: Sequence[int]) -> Diagram:
    """The left-justified diagram with alpha_i boxes in row i.

    Column j holds exactly the rows i with alpha_i >= j.  Parts larger
    than n = len(alpha) would place boxes outside the grid and are
    rejected.
    """
    a = tuple(alpha)
    n = len(a)
    if any(p < 0 for p in a):
        raise ValueError(f"composition parts must be nonnegative, got {a}")
    if any(p > n for p in a):
        raise ValueError(f"part exceeding the grid size {n}: {a}")
    cols = tuple(tuple(i for i in range(1, n + 1) if a[i - 1] >= j) for j in range(1, n + 1))
    return Diagram(n, cols)


def subset_leq(r: Iterable[int], s: Iterable[int]) -> bool:
    """Componentwise order on subsets of 1..n.

    True iff the sets have equal size and, after sorting, the k-th element
    of r is at most the k-th element of s for every k.
    """
    rs = sorted(r)
    ss = sorted(s)
    return len(rs) == len(ss) and all(x <= y for x, y in zip(rs, ss))


def diagram_leq(c: Diagram, d: Diagram) -> bool:
    """Columnwise subset_leq; the diagrams must share the same n."""
    if c.n != d.n:
        raise ValueError(f"grid sizes differ: {c.n} vs {d.n}")
    return all(subset_leq(cj, dj) for cj, dj in zip(c.columns, d.columns))


def lower_subsets(s: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """All size-|s| subsets r of 1..n with subset_leq(r, s), in lex order.

    Built directly: r_1 < r_2 < ... with r_k <= s_k, which enumerates the
    lower set without scanning all size-|s| subsets.
    """
    bounds = sorted(s)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], k: int) -> None:
        if k == len(bounds):
            out.append(tuple(prefix))
            return
        start = prefix[-1] + 1 if prefix else 1
        for value in range(start, bounds[k] + 1):
            prefix.append(value)
            extend(prefix, k + 1)
            prefix.pop()

    extend([], 0)
    return out


def enumerate_lower_diagrams(d: Diagram) -> Iterator[Diagram]:
    """All diagrams c with diagram_leq(c, d), each exactly once.

    Columns vary independently, so the lower set is the Cartesian product
    of per-column lower sets; columns advance left to right with each
    column's candidates in lex order.
    """
    per_column = [lower_subsets(col, d.n) for col in d.columns]

    def build(j: int, chosen: list[tuple[int, ...]]) -> Iterator[Diagram]:
        if j == d.n:
            yield Diagram(d.n, tuple(chosen))
            return
        for candidate in per_column[j]:
            chosen.append(candidate)
            yield from build(j + 1, chosen)
            chosen.pop()

    yield from build(0, [])


def monomial_of_diagram(c: Diagram) -> tuple[int, ...]:
    """Row-occurrence counts across all columns (the exponent of x^C)."""
    counts = [0] * c.n
    for col in c.columns:
        for row in col:
            counts[row - 1] += 1
    return tuple(counts)

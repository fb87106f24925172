"""The two vector moves, the reachability order they generate, and the
dominance-order specialization.

For 1 <= i < j <= n, a T move swaps entries i and j (legal when the entry
at i is strictly smaller), and an M move adds 1 at i and subtracts 1 at j
(legal when entry_i < entry_j - 1).  beta is below alpha in the move order
when some sequence of legal moves leads from alpha to beta; legality is
always judged on the current vector, not on alpha.

Both moves preserve the coordinate sum and keep every coordinate inside
[min(alpha), max(alpha)], so breadth-first search over legal moves
terminates and computes the full reachable set.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import permutations

__all__ = [
    "Move",
    "MoveChain",
    "MoveError",
    "apply_move",
    "legal_moves",
    "closure",
    "closure_order",
    "leq_kappa",
    "dominance_leq",
    "dominated_rearrangements",
]


class MoveError(ValueError):
    """A move's side condition failed on the current vector."""


@dataclass(frozen=True)
class Move:
    kind: str  # "T" (swap) or "M" (transfer)
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in ("T", "M"):
            raise ValueError(f"move kind must be 'T' or 'M', got {self.kind!r}")
        if not 1 <= self.i < self.j:
            raise ValueError(f"move indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j}

    @classmethod
    def from_json_dict(cls, data) -> Move:
        return cls(data["kind"], data["i"], data["j"])


@dataclass(frozen=True)
class MoveChain:
    """A start vector and moves applied to it left to right."""

    start: tuple[int, ...]
    moves: tuple[Move, ...]

    def replay(self) -> tuple[int, ...]:
        """Apply the moves in order, checking every side condition.

        Raises MoveError if any move is illegal on the vector current at
        its position.
        """
        v = self.start
        for mv in self.moves:
            v = apply_move(v, mv)
        return v

    def to_json_dict(self) -> dict:
        return {"start": list(self.start), "moves": [m.to_json_dict() for m in self.moves]}

    @classmethod
    def from_json_dict(cls, data) -> MoveChain:
        return cls(tuple(data["start"]), tuple(Move.from_json_dict(m) for m in data["moves"]))


def apply_move(v: Sequence[int], mv: Move) -> tuple[int, ...]:
    """Apply one move, enforcing its side condition on v."""
    vec = tuple(v)
    if mv.j > len(vec):
        raise ValueError(f"move index {mv.j} out of range for length {len(vec)}")
    a, b = vec[mv.i - 1], vec[mv.j - 1]
    if mv.kind == "T":
        if not a < b:
            raise MoveError(f"T({mv.i},{mv.j}) needs entry {a} < {b} on {vec}")
        out = list(vec)
        out[mv.i - 1], out[mv.j - 1] = b, a
    else:
        if not a < b - 1:
            raise MoveError(f"M({mv.i},{mv.j}) needs entry {a} < {b} - 1 on {vec}")
        out = list(vec)
        out[mv.i - 1] += 1
        out[mv.j - 1] -= 1
    return tuple(out)


def legal_moves(v: Sequence[int]) -> list[Move]:
    """All legal moves on v: T before M, each in lex (i, j) order."""
    vec = tuple(v)
    n = len(vec)
    out = []
    for kind in ("T", "M"):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                a, b = vec[i - 1], vec[j - 1]
                if (kind == "T" and a < b) or (kind == "M" and a < b - 1):
                    out.append(Move(kind, i, j))
    return out


def _bfs_parents(alpha: tuple[int, ...]) -> dict[tuple[int, ...], tuple[tuple[int, ...], Move] | None]:
    """BFS from alpha; maps each reachable vector to its (parent, move).

    Insertion order is discovery order, which is deterministic because
    legal_moves is.  The sum/range invariants are asserted on every edge.
    """
    total = sum(alpha)
    lo = min(alpha, default=0)
    hi = max(alpha, default=0)
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], Move] | None] = {alpha: None}
    queue = deque([alpha])
    while queue:
        v = queue.popleft()
        for mv in legal_moves(v):
            w = apply_move(v, mv)
            assert sum(w) == total and all(lo <= x <= hi for x in w)
            if w not in parents:
                parents[w] = (v, mv)
                queue.append(w)
    return parents


def closure(alpha: Sequence[int]) -> set[tuple[int, ...]]:
    """Every vector reachable from alpha by legal moves, alpha included."""
    return set(_bfs_parents(tuple(alpha)))


def closure_order(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """The reachable set in BFS discovery order (deterministic)."""
    return list(_bfs_parents(tuple(alpha)))


def leq_kappa(beta: Sequence[int], alpha: Sequence[int]) -> tuple[bool, MoveChain | None]:
    """Decide reachability of beta from alpha; on success also return a
    witnessing chain from alpha to beta."""
    b = tuple(beta)
    a = tuple(alpha)
    if len(b) != len(a):
        raise ValueError(f"length mismatch: {len(b)} vs {len(a)}")
    parents = _bfs_parents(a)
    if b not in parents:
        return False, None
    path: list[Move] = []
    node = b
    while parents[node] is not None:
        parent, mv = parents[node]  # type: ignore[misc]
        path.append(mv)
        node = parent
    return True, MoveChain(a, tuple(reversed(path)))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Prefix-sum comparison of two equal-sum partitions.

    Shorter input is padded with zeros.  Raises on non-partition input or
    unequal sums.
    """
    m = _check_partition(mu, "mu")
    l = _check_partition(lam, "lambda")
    if sum(m) != sum(l):
        raise ValueError(f"sums differ: {sum(m)} vs {sum(l)}")
    width = max(len(m), len(l))
    m += (0,) * (width - len(m))
    l += (0,) * (width - len(l))
    acc_m = acc_l = 0
    for x, y in zip(m, l):
        acc_m += x
        acc_l += y
        if acc_m > acc_l:
            return False
    return True


def dominated_rearrangements(lam: Sequence[int]) -> set[tuple[int, ...]]:
    """All rearrangements of all partitions of |lambda| dominated by lambda,
    as length-len(lambda) vectors."""
    l = _check_partition(lam, "lambda")
    n = len(l)
    total = sum(l)
    out: set[tuple[int, ...]] = set()
    max_part = l[0] if l else 0
    for mu in _partitions(total, max_part, n):
        if dominance_leq(mu, l):
            out.update(permutations(mu))
    return out


def _partitions(total: int, max_part: int, slots: int):
    """Weakly decreasing length-``slots`` vectors with the given sum and
    largest part at most max_part."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    low = -(-total // slots)  # ceil: first part must carry its share
    for first in range(min(total, max_part), low - 1, -1):
        for rest in _partitions(total - first, first, slots - 1):
            yield (first,) + rest


def _check_partition(p: Sequence[int], name: str) -> tuple[int, ...]:
    t = tuple(p)
    if any(x < 0 for x in t):
        raise ValueError(f"{name} has a negative part: {t}")
    if any(t[k] < t[k + 1] for k in range(len(t) - 1)):
        raise ValueError(f"{name} is not weakly decreasing: {t}")
    return t

"""Batch cross-checks of the package's set equalities.

Each suite sweeps a family of inputs and compares two (or three) sets
that the underlying theory says coincide:

* ``kk``       monomials of lower diagrams vs key polynomial exponents
* ``ccc``      filling weights vs key polynomial exponents
* ``theorem11`` move closure vs exponents vs Newton lattice points
* ``aa``       weight sets of all fillings vs column-sorted fillings
* ``rado``     weakly increasing closures vs dominated rearrangements,
               and permutohedron inclusion vs dominance
* ``bruhat``   Newton polytopes of permutations vs interval polytopes

A suite fails iff some input exhibits a set inequality; failing outcomes
record the symmetric difference.  All sweeps are deterministic (fixed
enumeration orders, fixed RNG seed), so reports are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product

from .bruhat import longest_element, verify_qww0
from .diagram import Diagram, enumerate_lower_diagrams, monomial_of_diagram, skyline
from .filling import enumerate_fillings, enumerate_sorted_fillings, weight
from .moves import closure, dominance_leq, dominated_rearrangements, _partitions
from .polynomial import exponent_vectors, key_polynomial
from .polytope import VPolytope, lattice_points, polytope_subset
from .worked_examples import GRID4_DIAGRAM

__all__ = ["SUITE_NAMES", "SuiteResult", "VerificationReport", "run_verification"]

SUITE_NAMES = ("kk", "ccc", "theorem11", "aa", "rado", "bruhat")

_AA_SEED = 20240810
_PAIR_SUM_CAP = 10


@dataclass
class SuiteResult:
    name: str
    description: str
    passed: bool
    checked: int
    wall_time_s: float
    failures: list[dict] = field(default_factory=list)
    outcomes: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "checked": self.checked,
            "wall_time_s": self.wall_time_s,
            "failures": self.failures,
            "outcomes": self.outcomes,
        }


@dataclass
class VerificationReport:
    n_max: int
    part_max: int
    slow: bool
    passed: bool
    wall_time_s: float
    suites: list[SuiteResult]

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "part_max": self.part_max,
            "slow": self.slow,
            "passed": self.passed,
            "wall_time_s": self.wall_time_s,
            "suites": [s.to_json_dict() for s in self.suites],
        }


def compositions(n: int, part_max: int):
    """All length-n vectors with parts in 0..part_max, lexicographically."""
    return product(range(part_max + 1), repeat=n)


def composition_family(n_max: int, part_max: int, cap_parts_by_n: bool):
    """The sweep family: lengths 1..n_max.  Suites that build skyline
    diagrams cap parts at n, since larger parts leave the grid."""
    for n in range(1, n_max + 1):
        cap = min(part_max, n) if cap_parts_by_n else part_max
        for alpha in compositions(n, cap):
            yield alpha


def _set_outcome(label: dict, lhs: set, rhs: set) -> tuple[bool, dict]:
    equal = lhs == rhs
    outcome = dict(label)
    outcome["equal"] = equal
    if not equal:
        outcome["only_lhs"] = sorted(lhs - rhs)
        outcome["only_rhs"] = sorted(rhs - lhs)
    return equal, outcome


def _run_suite(name, description, iterator) -> SuiteResult:
    start = time.perf_counter()
    outcomes = []
    failures = []
    for equal, outcome in iterator:
        outcomes.append(outcome)
        if not equal:
            failures.append(outcome)
    elapsed = time.perf_counter() - start
    return SuiteResult(
        name=name,
        description=description,
        passed=not failures,
        checked=len(outcomes),
        wall_time_s=elapsed,
        failures=failures,
        outcomes=outcomes,
    )


def suite_kk(n_max: int, part_max: int) -> SuiteResult:
    def run():
        for alpha in composition_family(n_max, part_max, cap_parts_by_n=True):
            lower = {monomial_of_diagram(c) for c in enumerate_lower_diagrams(skyline(alpha))}
            exps = exponent_vectors(key_polynomial(alpha))
            yield _set_outcome({"alpha": list(alpha)}, lower, exps)

    return _run_suite("kk", "lower-diagram monomials == key exponents", run())


def suite_ccc(n_max: int, part_max: int) -> SuiteResult:
    def run():
        for alpha in composition_family(n_max, part_max, cap_parts_by_n=True):
            weights = {weight(f) for f in enumerate_fillings(skyline(alpha))}
            exps = exponent_vectors(key_polynomial(alpha))
            yield _set_outcome({"alpha": list(alpha)}, weights, exps)

    return _run_suite("ccc", "filling weights == key exponents", run())


def suite_theorem11(n_max: int, part_max: int) -> SuiteResult:
    def run():
        for alpha in composition_family(n_max, part_max, cap_parts_by_n=False):
            reach = closure(alpha)
            exps = exponent_vectors(key_polynomial(alpha))
            points = lattice_points(VPolytope.from_points(len(alpha), exps))
            eq1, out1 = _set_outcome({"alpha": list(alpha), "compared": "closure/exponents"}, reach, exps)
            eq2, out2 = _set_outcome({"alpha": list(alpha), "compared": "lattice/exponents"}, points, exps)
            yield eq1 and eq2, {**out1, "lattice_equal": eq2, **({} if eq2 else {"lattice_diff": out2})}

    return _run_suite(
        "theorem11", "move closure == key exponents == Newton lattice points", run()
    )


def random_diagram(rng: random.Random, n: int) -> Diagram:
    cols = []
    for _ in range(n):
        cols.append([r for r in range(1, n + 1) if rng.random() < 0.5])
    return Diagram.make(n, cols)


def suite_aa(n_max: int, random_count: int = 50, seed: int = _AA_SEED) -> SuiteResult:
    rng = random.Random(seed)
    cap = max(1, min(n_max, 4))
    diagrams = [GRID4_DIAGRAM]
    for _ in range(random_count):
        diagrams.append(random_diagram(rng, rng.randint(min(2, cap), cap)))

    def run():
        for d in diagrams:
            all_weights = {weight(f) for f in enumerate_fillings(d)}
            sorted_weights = {weight(f) for f in enumerate_sorted_fillings(d)}
            yield _set_outcome({"diagram": d.to_json_dict()}, all_weights, sorted_weights)

    return _run_suite("aa", "weight sets of all vs column-sorted fillings", run())


def suite_rado(n_max: int, part_max: int, pair_sum_cap: int = _PAIR_SUM_CAP) -> SuiteResult:
    def run():
        for alpha in composition_family(n_max, part_max, cap_parts_by_n=False):
            if any(alpha[k] > alpha[k + 1] for k in range(len(alpha) - 1)):
                continue
            lam = tuple(sorted(alpha, reverse=True))
            yield _set_outcome(
                {"kind": "closure", "alpha": list(alpha)},
                closure(alpha),
                dominated_rearrangements(lam),
            )
        n = n_max
        for total in range(pair_sum_cap + 1):
            parts = list(_partitions(total, total, n))
            for mu in parts:
                p_mu = VPolytope.from_points(n, set(permutations(mu)))
                for lam in parts:
                    p_lam = VPolytope.from_points(n, set(permutations(lam)))
                    subset = polytope_subset(p_mu, p_lam)
                    dominated = dominance_leq(mu, lam)
                    agree = subset == dominated
                    yield agree, {
                        "kind": "inclusion",
                        "mu": list(mu),
                        "lambda": list(lam),
                        "subset": subset,
                        "dominance": dominated,
                        "equal": agree,
                    }

    return _run_suite(
        "rado",
        "weakly increasing closures == dominated rearrangements; "
        "permutohedron inclusion iff dominance",
        run(),
    )


def suite_bruhat(n_max: int, slow: bool = False) -> SuiteResult:
    top = min(n_max, 5 if slow else 4)

    def run():
        for n in range(1, top + 1):
            for w in permutations(range(1, n + 1)):
                ok = verify_qww0(w)
                yield ok, {"w": list(w), "equal": ok}

    return _run_suite(
        "bruhat",
        f"Newton polytope of a permutation == interval polytope up to {longest_element(top)}",
        run(),
    )


def run_verification(
    n_max: int,
    part_max: int,
    suite_names: tuple[str, ...] = SUITE_NAMES,
    slow: bool = False,
) -> VerificationReport:
    start = time.perf_counter()
    results: list[SuiteResult] = []
    for name in suite_names:
        if name == "kk":
            results.append(suite_kk(n_max, part_max))
        elif name == "ccc":
            results.append(suite_ccc(n_max, part_max))
        elif name == "theorem11":
            results.append(suite_theorem11(n_max, part_max))
        elif name == "aa":
            results.append(suite_aa(n_max))
        elif name == "rado":
            results.append(suite_rado(n_max, part_max))
        elif name == "bruhat":
            results.append(suite_bruhat(n_max, slow=slow))
        else:
            raise ValueError(f"unknown suite {name!r}; known: {SUITE_NAMES}")
    elapsed = time.perf_counter() - start
    return VerificationReport(
        n_max=n_max,
        part_max=part_max,
        slow=slow,
        passed=all(r.passed for r in results),
        wall_time_s=elapsed,
        suites=results,
    )

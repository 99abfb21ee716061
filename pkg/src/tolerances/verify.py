"""Exhaustive and randomized verification suites.

Each suite walks a family of small instances and collects every instance on
which a theorem's conditions disagree. A suite passes when that list is
empty.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .blocks import block_bitsets, blocks, brute_force_block_bitsets
from .coverings import (
    Covering,
    canonical_bases,
    induced_tolerance,
    irredundant_covering_of,
    is_irredundant,
    is_neighborhood_family,
)
from .enumeration import (
    all_coverings,
    all_quasiorders,
    all_tolerances,
    posets_up_to_isomorphism,
    random_tolerance,
)
from .errors import ValidationError
from .lattice import (
    atoms_are_block_neighborhoods,
    brute_force_lower_family,
    brute_force_upper_family,
    check_c1_c2_c3,
    check_distributive_corollary,
    downset_lattice,
    lower_definable,
    upper_definable,
)
from .order import (
    check_characterization,
    check_helly_theorem,
    check_main_equivalence,
    has_helly2,
    helly2_by_triples,
    helly_number,
)
from .relation import Subset, Universe, lower_bits, upper_bits

QUASIORDER_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}


@dataclass
class SuiteResult:
    name: str
    counts: dict[int, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        per = ", ".join(f"n={n}: {c}" for n, c in sorted(self.counts.items()))
        return f"{self.name}: {status} ({per}; {len(self.failures)} failures, {self.seconds:.2f}s)"


def _timed(fn):
    def run(*args, **kwargs) -> SuiteResult:
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _edges(R) -> str:
    return repr(R)


@_timed
def characterization_suite(n: int) -> SuiteResult:
    """Every tolerance on 1..n points: both sides of the characterization agree."""
    res = SuiteResult("characterization")
    for size in range(1, n + 1):
        count = 0
        for R in all_tolerances(size):
            count += 1
            rep = check_characterization(R)
            if not rep.consistent:
                res.failures.append(f"{_edges(R)}: {dict(rep.conditions)}")
        res.counts[size] = count
    return res


@_timed
def d1d2_suite(n: int) -> SuiteResult:
    """Every covering of 1..n points: irredundant iff all members are neighbourhoods."""
    res = SuiteResult("d1d2")
    for size in range(1, n + 1):
        u = Universe.letters(size)
        count = 0
        for fam in all_coverings(size):
            count += 1
            H = Covering.from_bitsets(u, fam)
            R = induced_tolerance(H)
            irr = is_irredundant(H)
            if irr != is_neighborhood_family(H, R):
                res.failures.append(f"{H.as_labels()}")
            if irr and not all(b.bits in blocks(R).bitsets() for b in H.sets):
                res.failures.append(f"irredundant member not a block: {H.as_labels()}")
        res.counts[size] = count
    return res


@_timed
def helly_suite(n: int) -> SuiteResult:
    """Every quasiorder on 1..n points: the Helly characterisation and the triple test agree."""
    res = SuiteResult("helly")
    for size in range(1, n + 1):
        count = 0
        for Q in all_quasiorders(size):
            count += 1
            rep = check_helly_theorem(Q)
            if not rep.consistent:
                res.failures.append(f"{Q!r}: {dict(rep.conditions)}")
            h2 = has_helly2(Q)
            if not (helly2_by_triples(Q) == h2 == (helly_number(Q) <= 2)):
                res.failures.append(f"{Q!r}: Helly-2 tests disagree")
        expected = QUASIORDER_COUNTS.get(size)
        if expected is not None and count != expected:
            res.failures.append(f"expected {expected} quasiorders on {size} points, saw {count}")
        res.counts[size] = count
    return res


@_timed
def main_suite(n: int) -> SuiteResult:
    """Irredundant-covering induced tolerances on 1..n points: the four block conditions agree."""
    res = SuiteResult("main")
    for size in range(1, n + 1):
        count = 0
        for R in all_tolerances(size):
            if not check_characterization(R).value:
                continue
            count += 1
            rep = check_main_equivalence(R, oracle=size <= 5)
            if not rep.consistent:
                res.failures.append(f"{_edges(R)}: {dict(rep.conditions)}")
            H = irredundant_covering_of(R)
            members = [X.bits for X in H.sets]
            for r in R.rows:
                union = 0
                for b in members:
                    if b & ~r == 0:
                        union |= b
                if union != r:
                    res.failures.append(f"{_edges(R)}: a neighbourhood is not a union of members")
                    break
        res.counts[size] = count
    return res


@_timed
def c1c2c3_suite(n: int, isomorphisms: bool = True) -> SuiteResult:
    """Every tolerance on 1..n points: the three lattice conditions agree."""
    res = SuiteResult("c1c2c3")
    for size in range(1, n + 1):
        count = 0
        for R in all_tolerances(size):
            count += 1
            rep = check_c1_c2_c3(R, isomorphisms=isomorphisms)
            if not rep.consistent:
                res.failures.append(f"{_edges(R)}: {dict(rep.conditions)}")
            if not all(rep.details.values()):
                res.failures.append(f"{_edges(R)}: {dict(rep.details)}")
            if rep.value and not atoms_are_block_neighborhoods(R):
                res.failures.append(f"{_edges(R)}: atoms differ from block neighbourhoods")
        res.counts[size] = count
    return res


@_timed
def corollary_suite(n: int) -> SuiteResult:
    """Downset lattices of all posets on 1..n points, up to isomorphism."""
    res = SuiteResult("corollary")
    for size in range(1, n + 1):
        count = 0
        for P in posets_up_to_isomorphism(size):
            count += 1
            L = downset_lattice(P)
            rep = check_distributive_corollary(L)
            if not rep.consistent:
                res.failures.append(f"{P!r}: {dict(rep.conditions)}")
        res.counts[size] = count
    return res


@_timed
def unique_base_suite(n: int) -> SuiteResult:
    """Subfamilies of blocks inducing R: irredundant iff unique canonical base of neighbourhoods."""
    res = SuiteResult("unique-base")
    for size in range(1, n + 1):
        count = 0
        for R in all_tolerances(size):
            bl = blocks(R)
            bases = canonical_bases(R)
            base_bits = [frozenset(X.bits for X in b) for b in bases]
            members = list(bl.blocks)
            for k in range(1, len(members) + 1):
                for fam in combinations(members, k):
                    union = 0
                    for X in fam:
                        union |= X.bits
                    if union != R.universe.full:
                        continue
                    H = Covering(R.universe, fam)
                    if induced_tolerance(H) != R:
                        continue
                    count += 1
                    lhs = is_irredundant(H)
                    rhs = base_bits == [H.bitsets()] and is_neighborhood_family(H, R)
                    if lhs != rhs:
                        res.failures.append(f"{_edges(R)} with {H.as_labels()}")
        res.counts[size] = count
    return res


@_timed
def block_oracle_suite(samples: int = 500, max_n: int = 12, seed: int = 0) -> SuiteResult:
    """Random tolerances: pivoting enumeration equals brute-force maximal preblocks."""
    res = SuiteResult("blocks")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_n)
        R = random_tolerance(rng, n)
        if sorted(block_bitsets(R)) != sorted(brute_force_block_bitsets(R)):
            res.failures.append(_edges(R))
        res.counts[n] = res.counts.get(n, 0) + 1
    return res


@_timed
def definable_oracle_suite(samples: int = 200, max_n: int = 12, seed: int = 1) -> SuiteResult:
    """Random tolerances: definable families equal brute force; lower is dual to upper."""
    res = SuiteResult("definable")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_n)
        R = random_tolerance(rng, n)
        full = R.universe.full
        if set(upper_definable(R).bitsets()) != brute_force_upper_family(R):
            res.failures.append(f"upper: {_edges(R)}")
        if set(lower_definable(R).bitsets()) != brute_force_lower_family(R):
            res.failures.append(f"lower: {_edges(R)}")
        for X in range(1 << n):
            if lower_bits(R, X) != full & ~upper_bits(R, full & ~X):
                res.failures.append(f"duality: {_edges(R)} at {Subset(R.universe, X)!r}")
                break
        res.counts[n] = res.counts.get(n, 0) + 1
    return res


SUITES: dict[str, tuple[Callable[[int], SuiteResult], int]] = {
    "characterization": (characterization_suite, 5),
    "d1d2": (d1d2_suite, 4),
    "helly": (helly_suite, 4),
    "main": (main_suite, 5),
    "c1c2c3": (c1c2c3_suite, 5),
    "corollary": (corollary_suite, 4),
    "unique-base": (unique_base_suite, 4),
}


def run_suite(name: str, n: int) -> SuiteResult:
    try:
        fn, bound = SUITES[name]
    except KeyError:
        raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if not 1 <= n <= bound:
        raise ValidationError(f"suite {name!r} accepts 1 <= n <= {bound}")
    return fn(n)

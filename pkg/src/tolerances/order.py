"""Helly numbers of quasiordered sets and the theorem-equivalence verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .blocks import DEFAULT_BLOCK_CAP, block_bitsets, blocks
from .coverings import (
    EXHAUSTIVE_COVERING_MAX,
    Covering,
    exists_irredundant_covering_constructive,
    exists_irredundant_covering_exhaustive,
    irredundant_covering_of,
    is_irredundant,
    is_normal,
)
from .errors import UniverseTooLarge, ValidationError
from .relation import (
    Quasiorder,
    Subset,
    Tolerance,
    Universe,
    is_bounded_by_minimal,
    iter_bits,
    lower_bounds,
    minimal_bits,
    quasiorder_of,
    tolerance_of,
)

HELLY_MAX = 12


@dataclass(frozen=True)
class EquivalenceReport:
    """Truth values of conditions that a theorem says are equivalent."""

    name: str
    conditions: Mapping[str, bool]
    details: Mapping[str, object] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) <= 1

    @property
    def value(self) -> bool | None:
        """The common truth value, or None when the conditions disagree."""
        vals = set(self.conditions.values())
        return vals.pop() if len(vals) == 1 else None

    def __getitem__(self, key: str) -> bool:
        return self.conditions[key]

    def to_dict(self) -> dict:
        out = {"conditions": dict(self.conditions), "consistent": self.consistent}
        if self.details:
            out["details"] = dict(self.details)
        return out


class NeighborhoodPoset:
    """The distinct neighbourhoods of a tolerance ordered by inclusion."""

    def __init__(self, R: Tolerance):
        self.tolerance = R
        self.universe = R.universe
        self.sets: tuple[int, ...] = tuple(sorted(set(R.rows)))
        pos = {b: i for i, b in enumerate(self.sets)}
        self.image: tuple[int, ...] = tuple(pos[r] for r in R.rows)

    def __len__(self) -> int:
        return len(self.sets)

    def leq(self, i: int, j: int) -> bool:
        return self.sets[i] & ~self.sets[j] == 0

    def minimal(self) -> list[int]:
        return [
            i
            for i, s in enumerate(self.sets)
            if not any(t != s and t & ~s == 0 for t in self.sets)
        ]

    def as_quasiorder(self) -> Quasiorder:
        u = Universe(tuple(f"N{i}" for i in range(len(self.sets))))
        rows = [
            sum(1 << j for j in range(len(self.sets)) if self.leq(i, j))
            for i in range(len(self.sets))
        ]
        return Quasiorder(u, rows)

    def subsets(self) -> list[Subset]:
        return [Subset(self.universe, s) for s in self.sets]


def _minimal_bad_sizes(Q: Quasiorder) -> int:
    """Largest size of a subset lacking a common lower bound whose proper subsets all have one."""
    n = Q.n
    if n > HELLY_MAX:
        raise UniverseTooLarge(f"Helly number brute force limited to |U| <= {HELLY_MAX}")
    down = Q.down
    lb = [0] * (1 << n)
    lb[0] = Q.universe.full
    worst = 0
    for A in range(1, 1 << n):
        low = (A & -A).bit_length() - 1
        lb[A] = lb[A & (A - 1)] & down[low]
        if lb[A]:
            continue
        if all(lb[A & ~(1 << x)] for x in iter_bits(A)):
            worst = max(worst, bin(A).count("1"))
    return worst


def helly_number(Q: Quasiorder, cap: int = HELLY_MAX) -> int:
    """Least ``k >= 1`` such that any subset whose k-element subsets all have
    a common lower bound has one itself.

    Exhaustive over all subsets, so ``|U| <= cap`` is required. Subsets
    without a lower bound are upward closed, so the answer is the largest
    minimal such subset (or 1 if there is none).
    """
    if Q.n > cap:
        raise UniverseTooLarge(f"|U| = {Q.n} exceeds Helly brute-force bound {cap}")
    return max(1, _minimal_bad_sizes(Q))


def helly_holds_for(Q: Quasiorder, k: int) -> bool:
    """The definition taken literally for one k; small n only."""
    n = Q.n
    if n > HELLY_MAX:
        raise UniverseTooLarge(f"Helly brute force limited to |U| <= {HELLY_MAX}")
    for A in range(1, 1 << n):
        elems = list(iter_bits(A))
        if lower_bounds(Q, A):
            continue
        size = min(k, len(elems))
        if all(lower_bounds(Q, sum(1 << x for x in c)) for c in combinations(elems, size)):
            return False
    return True


def has_helly2(Q: Quasiorder, cap: int = DEFAULT_BLOCK_CAP) -> bool:
    """Helly number at most 2: every block of the induced tolerance has a lower bound."""
    return all(lower_bounds(Q, b) for b in block_bitsets(tolerance_of(Q), cap))


def helly2_by_triples(Q: Quasiorder) -> bool:
    """Criterion over triples of minimal elements with pairwise meeting upsets."""
    mins = list(iter_bits(minimal_bits(Q)))
    ups = Q.rows
    min_ups = [ups[m] for m in mins]
    for a1, a2, a3 in combinations(mins, 3):
        i12, i13, i23 = ups[a1] & ups[a2], ups[a1] & ups[a3], ups[a2] & ups[a3]
        if not (i12 and i13 and i23):
            continue
        union = i12 | i13 | i23
        if not any(union & ~u == 0 for u in min_ups):
            return False
    return True


def check_characterization(
    R: Tolerance, exhaustive_max: int = EXHAUSTIVE_COVERING_MAX
) -> EquivalenceReport:
    """Irredundant-covering induced  <=>  bounded by minimal elements and R equals the product relation.

    Side (a) uses exhaustive covering search up to ``exhaustive_max``
    elements and construct-and-verify above that.
    """
    if R.n <= exhaustive_max:
        a = exists_irredundant_covering_exhaustive(R)
        method = "exhaustive"
    else:
        a = exists_irredundant_covering_constructive(R)
        method = "constructive"
    Q = quasiorder_of(R)
    b = is_bounded_by_minimal(Q) and tolerance_of(Q) == R
    return EquivalenceReport(
        "characterization",
        {"induced_by_irredundant_covering": a, "bounded_and_equals_product": b},
        {"method": method},
    )


def check_helly_theorem(Q: Quasiorder, cap: int = DEFAULT_BLOCK_CAP) -> EquivalenceReport:
    """Helly number 2  <=>  blocks are the minimal upsets  <=>  blocks form an irredundant covering."""
    u = Q.universe
    helly = has_helly2(Q, cap)
    bl = blocks(tolerance_of(Q), cap)
    min_ups = frozenset(Q.rows[m] for m in iter_bits(minimal_bits(Q)))
    b = bl.bitsets() == min_ups
    c = is_irredundant(Covering(u, bl.blocks)) and is_bounded_by_minimal(Q)
    return EquivalenceReport(
        "helly",
        {"helly_number_2": helly, "blocks_are_minimal_upsets": b, "blocks_irredundant": c},
    )


class NotIrredundantlyInduced(ValidationError):
    pass


def triple_condition(H: Covering) -> bool:
    """Pairwise-meeting triples of members have their intersections inside one member."""
    members = [X.bits for X in H.sets]
    for b1, b2, b3 in combinations(members, 3):
        i12, i13, i23 = b1 & b2, b1 & b3, b2 & b3
        if not (i12 and i13 and i23):
            continue
        union = i12 | i13 | i23
        if not any(union & ~b == 0 for b in members):
            return False
    return True


def check_main_equivalence(
    R: Tolerance, oracle: bool = False, cap: int = DEFAULT_BLOCK_CAP
) -> EquivalenceReport:
    """For R induced by an irredundant covering H: H is the block family,
    H is normal, the triple condition, and Helly number 2 all coincide."""
    H = irredundant_covering_of(R)
    if H is None:
        raise NotIrredundantlyInduced("tolerance is not induced by an irredundant covering")
    bl = blocks(R, cap)
    extra = [b for b in bl.blocks if b.bits not in H.bitsets()]
    return EquivalenceReport(
        "main",
        {
            "covering_equals_blocks": bl.bitsets() == H.bitsets(),
            "covering_is_normal": is_normal(H, oracle=oracle, cap=cap),
            "triple_condition": triple_condition(H),
            "helly_number_2": has_helly2(quasiorder_of(R), cap),
        },
        {"extra_blocks": [list(b.labels) for b in extra]},
    )

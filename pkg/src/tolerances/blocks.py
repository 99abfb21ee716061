"""Preblocks, blocks and block enumeration.

A block of a tolerance is a maximal clique of its graph, so enumeration is a
Bron-Kerbosch search with Tomita pivoting, run directly on row bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BlockLimitExceeded, UniverseMismatch, ValidationError
from .relation import (
    Element,
    Subset,
    Tolerance,
    Universe,
    iter_bits,
    sort_family,
)

DEFAULT_BLOCK_CAP = 10**6


def _bits_of(R: Tolerance, X: Subset) -> int:
    if X.universe != R.universe:
        raise UniverseMismatch("subset and tolerance belong to different universes")
    return X.bits


def preblock_bits(R: Tolerance, bits: int) -> bool:
    if not bits:
        return False
    rows = R.rows
    return all(bits & ~rows[x] == 0 for x in iter_bits(bits))


def common_neighbors(R: Tolerance, bits: int) -> int:
    """``{x | bits <= R(x)}``: the elements related to every member."""
    out = 0
    for x, row in enumerate(R.rows):
        if bits & ~row == 0:
            out |= 1 << x
    return out


def block_bits(R: Tolerance, bits: int) -> bool:
    if not preblock_bits(R, bits):
        return False
    rows = R.rows
    for x in iter_bits(R.universe.full & ~bits):
        if bits & ~rows[x] == 0:
            return False
    return True


def is_preblock(R: Tolerance, X: Subset) -> bool:
    """Nonempty and every pair of members is related."""
    return preblock_bits(R, _bits_of(R, X))


def is_block(R: Tolerance, X: Subset) -> bool:
    """A maximal preblock.

    Cross-checked against the fixed-point form ``B == {x | B <= R(x)}``.
    """
    bits = _bits_of(R, X)
    maximal = block_bits(R, bits)
    fixed = bool(bits) and common_neighbors(R, bits) == bits
    assert maximal == fixed, f"block tests disagree on {X!r}"
    return maximal


@dataclass(frozen=True)
class BlockFamily:
    universe: Universe
    blocks: tuple[Subset, ...]

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, X: Subset) -> bool:
        return X in self.blocks

    def bitsets(self) -> frozenset[int]:
        return frozenset(b.bits for b in self.blocks)

    def as_labels(self) -> list[list[str]]:
        return [list(b.labels) for b in self.blocks]


def block_bitsets(R: Tolerance, cap: int = DEFAULT_BLOCK_CAP) -> list[int]:
    """All maximal cliques as bitsets, in discovery order."""
    nbrs = [row & ~(1 << i) for i, row in enumerate(R.rows)]
    out: list[int] = []

    def expand(clique: int, cand: int, excluded: int) -> None:
        if not cand:
            if not excluded:
                out.append(clique)
                if len(out) > cap:
                    raise BlockLimitExceeded(f"more than {cap} blocks")
            return
        # pivot: the vertex covering the most candidates
        pivot_nbrs, best = 0, -1
        for u in iter_bits(cand | excluded):
            c = bin(cand & nbrs[u]).count("1")
            if c > best:
                best, pivot_nbrs = c, nbrs[u]
        for v in iter_bits(cand & ~pivot_nbrs):
            bit = 1 << v
            expand(clique | bit, cand & nbrs[v], excluded & nbrs[v])
            cand &= ~bit
            excluded |= bit

    expand(0, R.universe.full, 0)
    return out


def blocks(R: Tolerance, cap: int = DEFAULT_BLOCK_CAP) -> BlockFamily:
    """All blocks of ``R`` in canonical order.

    Raises BlockLimitExceeded when there are more than ``cap`` blocks.
    """
    u = R.universe
    family = sort_family(Subset(u, b) for b in block_bitsets(R, cap))
    return BlockFamily(u, family)


def brute_force_block_bitsets(R: Tolerance) -> list[int]:
    """Reference enumeration over all subsets; exponential, small n only."""
    n = R.n
    rows = R.rows
    pre = bytearray(1 << n)
    pre[0] = 1  # sentinel so singletons pass the recurrence
    found = []
    for bits in range(1, 1 << n):
        low = (bits & -bits).bit_length() - 1
        rest = bits & (bits - 1)
        if pre[rest] and rest & ~rows[low] == 0:
            pre[bits] = 1
            for x in range(n):
                if not bits >> x & 1 and bits & ~rows[x] == 0:
                    break
            else:
                found.append(bits)
    return found


class NeighborhoodBlockReport(NamedTuple):
    is_block: bool
    pairwise_related: bool
    contained_in_member_neighborhoods: bool
    equals_meet_of_member_neighborhoods: bool

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1


def neighborhood_block_report(R: Tolerance, x: Element) -> NeighborhoodBlockReport:
    """Evaluate four equivalent ways of saying that ``R(x)`` is a block."""
    rows = R.rows
    nx = rows[R.universe.index(x)]
    members = list(iter_bits(nx))
    a = block_bits(R, nx)
    b = all(rows[p] >> q & 1 for p in members for q in members)
    c = all(nx & ~rows[p] == 0 for p in members)
    meet = R.universe.full
    for p in members:
        meet &= rows[p]
    d = meet == nx
    report = NeighborhoodBlockReport(a, b, c, d)
    assert report.consistent, f"neighbourhood block conditions disagree at {x!r}: {report}"
    return report


def tolerance_from_blocks(family: Iterable[Subset]) -> Tolerance:
    """``R = union of X*X`` over the family, which must cover its universe."""
    family = list(family)
    if not family:
        raise ValidationError("empty family cannot cover a universe")
    u = family[0].universe
    rows = [0] * u.n
    covered = 0
    for X in family:
        if X.universe != u:
            raise UniverseMismatch("family members belong to different universes")
        if not X.bits:
            raise ValidationError("family contains an empty member")
        covered |= X.bits
        for x in iter_bits(X.bits):
            rows[x] |= X.bits
    if covered != u.full:
        missing = Subset(u, u.full & ~covered)
        raise ValidationError(f"family is not a covering; uncovered: {missing!r}")
    return Tolerance(u, rows)

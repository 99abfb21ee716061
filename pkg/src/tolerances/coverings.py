"""Coverings of a universe and the tolerances they induce."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .blocks import DEFAULT_BLOCK_CAP, block_bits, blocks
from .errors import (
    SearchLimitExceeded,
    UniverseMismatch,
    UniverseTooLarge,
    ValidationError,
)
from .relation import (
    Element,
    Subset,
    Tolerance,
    Universe,
    is_bounded_by_minimal,
    iter_bits,
    minimal_bits,
    quasiorder_of,
    sort_family,
    tolerance_of,
)

NORMAL_ORACLE_MAX = 8
EXHAUSTIVE_COVERING_MAX = 4


@dataclass(frozen=True)
class Covering:
    """A family of distinct nonempty subsets whose union is the universe."""

    universe: Universe
    sets: tuple[Subset, ...]

    def __init__(self, universe: Universe, sets: Iterable[Subset], dedup: bool = False):
        seen: dict[int, Subset] = {}
        covered = 0
        for X in sets:
            if X.universe != universe:
                raise UniverseMismatch("covering member from a different universe")
            if not X.bits:
                raise ValidationError("covering members must be nonempty")
            if X.bits in seen:
                if not dedup:
                    raise ValidationError(f"duplicate covering member {X!r}")
                continue
            seen[X.bits] = X
            covered |= X.bits
        if covered != universe.full:
            missing = Subset(universe, universe.full & ~covered)
            raise ValidationError(f"not a covering; uncovered elements {missing!r}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "sets", sort_family(seen.values()))

    @classmethod
    def from_labels(
        cls, universe: Universe, sets: Iterable[Iterable[Element] | str], dedup: bool = False
    ) -> "Covering":
        return cls(universe, [universe.subset(s) for s in sets], dedup=dedup)

    @classmethod
    def from_bitsets(cls, universe: Universe, bitsets: Iterable[int]) -> "Covering":
        return cls(universe, [Subset(universe, b) for b in bitsets])

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def bitsets(self) -> frozenset[int]:
        return frozenset(X.bits for X in self.sets)

    def as_labels(self) -> list[list[str]]:
        return [list(X.labels) for X in self.sets]


def _induced_rows(n: int, bitsets: Iterable[int]) -> list[int]:
    rows = [0] * n
    for b in bitsets:
        for x in iter_bits(b):
            rows[x] |= b
    return rows


def induced_tolerance(H: Covering) -> Tolerance:
    """Two elements are related iff some member contains both."""
    return Tolerance(H.universe, _induced_rows(H.universe.n, H.bitsets()))


def _irredundant_bits(bitsets: Sequence[int]) -> bool:
    once = twice = 0
    for b in bitsets:
        twice |= once & b
        once |= b
    private = once & ~twice
    return all(b & private for b in bitsets)


def is_irredundant(H: Covering) -> bool:
    """No member can be dropped; i.e. each has an element no other member covers."""
    return _irredundant_bits([X.bits for X in H.sets])


def is_neighborhood_family(H: Covering, R: Tolerance) -> bool:
    """Every member equals ``R(x)`` for some ``x``."""
    if H.universe != R.universe:
        raise UniverseMismatch("covering and tolerance belong to different universes")
    hoods = set(R.rows)
    return all(X.bits in hoods for X in H.sets)


def normal_by_definition(H: Covering) -> bool:
    """Literal antichain plus two-element-witness test; exponential in |U|.

    Every subset M not inside any member must contain a pair of distinct
    elements that no member contains.
    """
    n = H.universe.n
    if n > NORMAL_ORACLE_MAX:
        raise UniverseTooLarge(f"normality oracle limited to |U| <= {NORMAL_ORACLE_MAX}")
    members = [X.bits for X in H.sets]
    for a, b in combinations(members, 2):
        if a & ~b == 0 or b & ~a == 0:
            return False
    pair_ok = [[False] * n for _ in range(n)]
    for m in members:
        for x in iter_bits(m):
            for y in iter_bits(m):
                pair_ok[x][y] = True
    for M in range(1 << n):
        if any(M & ~b == 0 for b in members):
            continue
        elems = list(iter_bits(M))
        if not any(not pair_ok[x][y] for x, y in combinations(elems, 2)):
            return False
    return True


def is_normal(H: Covering, oracle: bool = False, cap: int = DEFAULT_BLOCK_CAP) -> bool:
    """``H`` is exactly the block family of the tolerance it induces.

    With ``oracle`` (only for |U| <= 8) the direct definition is evaluated too
    and must agree.
    """
    decided = blocks(induced_tolerance(H), cap).bitsets() == H.bitsets()
    if oracle:
        direct = normal_by_definition(H)
        assert direct == decided, f"normality tests disagree on {H.as_labels()}"
    return decided


def is_canonical_base(K: Iterable[Subset], R: Tolerance) -> bool:
    """Blocks of ``R`` that induce ``R``, none of which can be dropped."""
    members = []
    for X in K:
        if X.universe != R.universe:
            raise UniverseMismatch("family and tolerance belong to different universes")
        members.append(X.bits)
    if len(set(members)) != len(members) or not members:
        return False
    if not all(block_bits(R, b) for b in members):
        return False
    n = R.n
    if tuple(_induced_rows(n, members)) != R.rows:
        return False
    for i in range(len(members)):
        rest = members[:i] + members[i + 1 :]
        if tuple(_induced_rows(n, rest)) == R.rows:
            return False
    return True


def canonical_bases(
    R: Tolerance, limit: int = 1 << 20, cap: int = DEFAULT_BLOCK_CAP
) -> list[list[Subset]]:
    """Every canonical base, by exhaustive search over subfamilies of blocks."""
    bl = [b.bits for b in blocks(R, cap)]
    k = len(bl)
    if (1 << k) > limit:
        raise SearchLimitExceeded(f"2^{k} subfamilies of blocks exceed limit {limit}")
    n, target = R.n, R.rows
    inducing = set()
    for mask in range(1, 1 << k):
        fam = [bl[i] for i in iter_bits(mask)]
        if tuple(_induced_rows(n, fam)) == target:
            inducing.add(mask)
    # canonical = inducing and minimal under removal of one member
    found = []
    for mask in sorted(inducing):
        if all(mask & ~(1 << i) not in inducing for i in iter_bits(mask)):
            found.append(sort_family(Subset(R.universe, bl[i]) for i in iter_bits(mask)))
    found.sort(key=lambda fam: [X.key() for X in fam])
    return [list(f) for f in found]


def irredundant_covering_of(R: Tolerance) -> Covering | None:
    """The upsets of minimal elements, if they form an irredundant covering inducing R.

    Returns None when no irredundant covering induces ``R``.
    """
    Q = quasiorder_of(R)
    if not is_bounded_by_minimal(Q) or tolerance_of(Q) != R:
        return None
    ups = {Q.rows[m] for m in iter_bits(minimal_bits(Q))}
    H = Covering.from_bitsets(R.universe, ups)
    assert is_irredundant(H)
    assert induced_tolerance(H) == R
    for m in iter_bits(minimal_bits(Q)):
        assert R.rows[m] == Q.rows[m] and block_bits(R, R.rows[m])
    return H


@lru_cache(maxsize=None)
def _irredundantly_induced(n: int) -> frozenset[tuple[int, ...]]:
    """Row tuples of every tolerance on n points induced by an irredundant covering."""
    if n > EXHAUSTIVE_COVERING_MAX:
        raise UniverseTooLarge(f"exhaustive covering search limited to |U| <= {EXHAUSTIVE_COVERING_MAX}")
    full = (1 << n) - 1
    out = set()
    # an irredundant covering has at most n members (one private point each)
    for k in range(1, n + 1):
        for fam in combinations(range(1, full + 1), k):
            union = 0
            for b in fam:
                union |= b
            if union == full and _irredundant_bits(fam):
                out.add(tuple(_induced_rows(n, fam)))
    return frozenset(out)


def exists_irredundant_covering_exhaustive(R: Tolerance) -> bool:
    """Search every family of subsets of U for an irredundant covering inducing R."""
    return R.rows in _irredundantly_induced(R.n)


def exists_irredundant_covering_constructive(R: Tolerance) -> bool:
    """Build the minimal-element upsets and verify they work, without any shortcut."""
    Q = quasiorder_of(R)
    ups = {Q.rows[m] for m in iter_bits(minimal_bits(Q))}
    if not ups:
        return False
    fam = sorted(ups)
    union = 0
    for b in fam:
        union |= b
    if union != R.universe.full:
        return False
    return _irredundant_bits(fam) and tuple(_induced_rows(R.n, fam)) == R.rows

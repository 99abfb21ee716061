"""Universes, subsets and binary relations over them.

Subsets are Python ints used as bitsets (bit ``i`` is element ``i`` of the
universe); a relation is a tuple of row bitsets, i.e. a dense bit matrix.
Everything is immutable, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import UnknownElement, UniverseMismatch, ValidationError

Element = Union[str, int]


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class Universe:
    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValidationError("universe must contain at least one element")
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"labels must be nonempty strings, got {label!r}")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            dupes = sorted({l for l in labels if labels.count(l) > 1})
            raise ValidationError(f"duplicate labels in universe: {', '.join(dupes)}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, labels: Iterable[str] | str) -> "Universe":
        """Build a universe; a plain string is split on whitespace."""
        if isinstance(labels, str):
            labels = labels.split()
        return cls(tuple(labels))

    @classmethod
    def letters(cls, n: int) -> "Universe":
        if not 1 <= n <= 26:
            raise ValidationError("letters() supports 1..26 elements")
        return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, x: Element) -> int:
        if isinstance(x, str):
            try:
                return self._index[x]
            except KeyError:
                raise UnknownElement(f"unknown element {x!r}") from None
        if isinstance(x, int) and not isinstance(x, bool) and 0 <= x < len(self.labels):
            return x
        raise UnknownElement(f"unknown element {x!r}")

    def label(self, i: int) -> str:
        return self.labels[i]

    def __contains__(self, x) -> bool:
        try:
            self.index(x)
        except UnknownElement:
            return False
        return True

    def subset(self, elements: Iterable[Element] | str = ()) -> "Subset":
        if isinstance(elements, str):
            elements = elements.split()
        bits = 0
        for x in elements:
            bits |= 1 << self.index(x)
        return Subset(self, bits)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def everything(self) -> "Subset":
        return Subset(self, self.full)

    def mask(self, elements: Iterable[Element]) -> int:
        return self.subset(elements).bits


@dataclass(frozen=True)
class Subset:
    """An extensional subset of a universe."""

    universe: Universe
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits > self.universe.full:
            raise ValidationError("subset bits out of range for universe")

    def _check(self, other: "Subset") -> int:
        if not isinstance(other, Subset):
            return NotImplemented
        if other.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")
        return other.bits

    def __and__(self, other):
        return Subset(self.universe, self.bits & self._check(other))

    def __or__(self, other):
        return Subset(self.universe, self.bits | self._check(other))

    def __sub__(self, other):
        return Subset(self.universe, self.bits & ~self._check(other))

    def __invert__(self):
        return Subset(self.universe, self.universe.full & ~self.bits)

    def complement(self) -> "Subset":
        return ~self

    def __le__(self, other):
        return self.bits & ~self._check(other) == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, x: Element) -> bool:
        return bool(self.bits >> self.universe.index(x) & 1)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    @property
    def labels(self) -> tuple[str, ...]:
        """Member labels, sorted by label for deterministic output."""
        return tuple(sorted(self.universe.labels[i] for i in iter_bits(self.bits)))

    def key(self) -> tuple[str, ...]:
        return self.labels

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


def sort_family(family: Iterable[Subset]) -> tuple[Subset, ...]:
    """Lexicographic order on the sorted member labels."""
    return tuple(sorted(family, key=Subset.key))


class _Relation:
    """Common storage: ``rows[i]`` is the bitset of all ``j`` with ``i R j``."""

    def __init__(self, universe: Universe, rows: Sequence[int]):
        rows = tuple(int(r) for r in rows)
        if len(rows) != universe.n:
            raise ValidationError(f"expected {universe.n} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r > universe.full:
                raise ValidationError("relation row out of range for universe")
        self._universe = universe
        self._rows = rows

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._universe == other._universe and self._rows == other._rows

    def __hash__(self):
        return hash((type(self).__name__, self._universe.labels, self._rows))

    @property
    def n(self) -> int:
        return self.universe.n

    def holds(self, x: Element, y: Element) -> bool:
        u = self.universe
        return bool(self.rows[u.index(x)] >> u.index(y) & 1)

    def pairs(self) -> list[tuple[str, str]]:
        labels = self.universe.labels
        return sorted(
            (labels[i], labels[j]) for i, row in enumerate(self.rows) for j in iter_bits(row)
        )

    def matrix(self) -> list[list[bool]]:
        n = self.n
        return [[bool(row >> j & 1) for j in range(n)] for row in self.rows]

    def transpose_rows(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose_rows()

    def is_transitive(self) -> bool:
        rows = self.rows
        for row in rows:
            reach = 0
            for j in iter_bits(row):
                reach |= rows[j]
            if reach & ~row:
                return False
        return True

    def __le__(self, other):
        if self.universe != other.universe:
            raise UniverseMismatch("relations over different universes")
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __repr__(self):
        edges = ", ".join(f"{x}{y}" for x, y in self.pairs() if x < y)
        return f"{type(self).__name__}({' '.join(self.universe.labels)}; {edges})"


class Tolerance(_Relation):
    """Reflexive symmetric relation."""

    def __init__(self, universe: Universe, rows: Sequence[int]):
        super().__init__(universe, rows)
        if not self.is_reflexive():
            raise ValidationError("tolerance must be reflexive")
        if not self.is_symmetric():
            raise ValidationError("tolerance must be symmetric")

    @classmethod
    def identity(cls, universe: Universe) -> "Tolerance":
        return cls(universe, [1 << i for i in range(universe.n)])

    @classmethod
    def from_matrix(cls, universe: Universe, matrix) -> "Tolerance":
        rows = [sum(1 << j for j, v in enumerate(r) if v) for r in matrix]
        return cls(universe, rows)


class Quasiorder(_Relation):
    """Reflexive transitive relation; ``rows[x]`` is the upset of ``x``."""

    def __init__(self, universe: Universe, rows: Sequence[int]):
        super().__init__(universe, rows)
        if not self.is_reflexive():
            raise ValidationError("quasiorder must be reflexive")
        if not self.is_transitive():
            raise ValidationError("quasiorder must be transitive")
        self._down = self.transpose_rows()

    @property
    def down(self) -> tuple[int, ...]:
        """``down[x]`` is the bitset of all elements below ``x``."""
        return self._down

    def leq(self, x: Element, y: Element) -> bool:
        return self.holds(x, y)

    @classmethod
    def from_pairs(cls, universe: Universe, pairs, close: bool = False) -> "Quasiorder":
        """Build from ``(x, y)`` pairs meaning ``x <= y``.

        Loops are added implicitly. With ``close`` the transitive closure is
        taken, otherwise non-transitive input is rejected.
        """
        rows = [1 << i for i in range(universe.n)]
        for x, y in pairs:
            rows[universe.index(x)] |= 1 << universe.index(y)
        if close:
            rows = transitive_closure(rows)
        return cls(universe, rows)

    def restrict(self, keep: Sequence[Element]) -> "Quasiorder":
        """The induced suborder on ``keep`` (in the given order)."""
        idx = [self.universe.index(x) for x in keep]
        sub = Universe(tuple(self.universe.labels[i] for i in idx))
        rows = []
        for i in idx:
            rows.append(sum(1 << k for k, j in enumerate(idx) if self.rows[i] >> j & 1))
        return Quasiorder(sub, rows)


def transitive_closure(rows: Sequence[int]) -> list[int]:
    """Warshall's algorithm on row bitsets."""
    rows = list(rows)
    for k in range(len(rows)):
        bit = 1 << k
        rk = rows[k]
        for i in range(len(rows)):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def tolerance_from_edges(universe: Universe, pairs, symmetrize: bool = False) -> Tolerance:
    """Reflexive closure of an edge list, optionally symmetrized."""
    rows = [1 << i for i in range(universe.n)]
    for x, y in pairs:
        i, j = universe.index(x), universe.index(y)
        rows[i] |= 1 << j
        if symmetrize:
            rows[j] |= 1 << i
    for i, row in enumerate(rows):
        for j in iter_bits(row):
            if not rows[j] >> i & 1:
                a, b = universe.labels[i], universe.labels[j]
                raise ValidationError(
                    f"asymmetric input: ({a}, {b}) given without ({b}, {a})"
                )
    return Tolerance(universe, rows)


def _check_subset(R: _Relation, X: Subset) -> int:
    if X.universe != R.universe:
        raise UniverseMismatch("subset and relation belong to different universes")
    return X.bits


def neighborhood(R: Tolerance, x: Element) -> Subset:
    return Subset(R.universe, R.rows[R.universe.index(x)])


def neighborhoods(R: Tolerance) -> dict[str, Subset]:
    return {label: Subset(R.universe, R.rows[i]) for i, label in enumerate(R.universe.labels)}


def upper_bits(R: Tolerance, bits: int) -> int:
    out = 0
    for y in iter_bits(bits):
        out |= R.rows[y]
    return out


def lower_bits(R: Tolerance, bits: int) -> int:
    out = 0
    for x, row in enumerate(R.rows):
        if row & ~bits == 0:
            out |= 1 << x
    return out


def upper_approx(R: Tolerance, X: Subset) -> Subset:
    """Elements whose neighbourhood meets ``X``."""
    bits = _check_subset(R, X)
    out = 0
    for x, row in enumerate(R.rows):
        if row & bits:
            out |= 1 << x
    # symmetry makes this the union of the neighbourhoods of X
    assert out == upper_bits(R, bits)
    return Subset(R.universe, out)


def lower_approx(R: Tolerance, X: Subset) -> Subset:
    """Elements whose neighbourhood lies inside ``X``."""
    bits = _check_subset(R, X)
    out = lower_bits(R, bits)
    full = R.universe.full
    assert out == full & ~upper_bits(R, full & ~bits)
    return Subset(R.universe, out)


def quasiorder_of(R: Tolerance) -> Quasiorder:
    """``x <= y`` iff ``R(x)`` is contained in ``R(y)``."""
    rows = R.rows
    out = []
    for rx in rows:
        out.append(sum(1 << y for y, ry in enumerate(rows) if rx & ~ry == 0))
    return Quasiorder(R.universe, out)


def tolerance_of(Q: Quasiorder) -> Tolerance:
    """The product of the inverse order with the order: common lower bound."""
    out = []
    for below in Q.down:
        row = 0
        for a in iter_bits(below):
            row |= Q.rows[a]
        out.append(row)
    return Tolerance(Q.universe, out)


def approx_related(R: Tolerance, x: Element, y: Element) -> bool:
    """Direct test: some ``R(a)`` fits inside ``R(x) & R(y)``."""
    u = R.universe
    common = R.rows[u.index(x)] & R.rows[u.index(y)]
    return any(ra & ~common == 0 for ra in R.rows)


def upset(Q: Quasiorder, x: Element) -> Subset:
    return Subset(Q.universe, Q.rows[Q.universe.index(x)])


def downset(Q: Quasiorder, x: Element) -> Subset:
    return Subset(Q.universe, Q.down[Q.universe.index(x)])


def minimal_bits(Q: Quasiorder) -> int:
    out = 0
    for x, (up, down) in enumerate(zip(Q.rows, Q.down)):
        if down & ~up == 0:
            out |= 1 << x
    return out


def minimal_elements(Q: Quasiorder) -> Subset:
    """Elements ``x`` such that anything below ``x`` is also above it."""
    return Subset(Q.universe, minimal_bits(Q))


def is_bounded_by_minimal(Q: Quasiorder) -> bool:
    """Every element lies above some minimal element.

    Always true on a finite universe; kept as an explicit check.
    """
    mins = minimal_bits(Q)
    return all(down & mins for down in Q.down)


def lower_bounds(Q: Quasiorder, bits: int) -> int:
    """Common lower bounds of the elements of ``bits`` (all of U for empty input)."""
    out = Q.universe.full
    for x in iter_bits(bits):
        out &= Q.down[x]
    return out


def find_isomorphism(R: _Relation, S: _Relation) -> dict[str, str] | None:
    """Search for a bijection ``f`` with ``x R y`` iff ``f(x) S f(y)``.

    Plain backtracking with degree pruning; meant for small instances.
    """
    n = R.n
    if S.n != n:
        return None
    deg_r = [bin(r).count("1") for r in R.rows]
    deg_s = [bin(r).count("1") for r in S.rows]
    if sorted(deg_r) != sorted(deg_s):
        return None
    in_r = [bin(c).count("1") for c in R.transpose_rows()]
    in_s = [bin(c).count("1") for c in S.transpose_rows()]
    order = sorted(range(n), key=lambda i: -deg_r[i])
    image = [-1] * n
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        for k in range(n):
            m = image[k]
            if m < 0:
                continue
            if bool(R.rows[i] >> k & 1) != bool(S.rows[j] >> m & 1):
                return False
            if bool(R.rows[k] >> i & 1) != bool(S.rows[m] >> j & 1):
                return False
        return bool(R.rows[i] >> i & 1) == bool(S.rows[j] >> j & 1)

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if used[j] or deg_s[j] != deg_r[i] or in_s[j] != in_r[i]:
                continue
            if consistent(i, j):
                image[i], used[j] = j, True
                if extend(pos + 1):
                    return True
                image[i], used[j] = -1, False
        return False

    if not extend(0):
        return None
    return {R.universe.labels[i]: S.universe.labels[image[i]] for i in range(n)}

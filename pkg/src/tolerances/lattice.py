"""Approximation lattices, concept lattices and finite lattices.

All lattices here are finite, so "complete" never needs separate treatment:
every finite lattice is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .blocks import DEFAULT_BLOCK_CAP, block_bits, blocks
from .errors import ValidationError
from .order import EquivalenceReport, check_characterization, has_helly2
from .relation import (
    Quasiorder,
    Subset,
    Tolerance,
    Universe,
    iter_bits,
    lower_bits,
    tolerance_of,
    transitive_closure,
    upper_bits,
)


def _popcount(x: int) -> int:
    return bin(x).count("1")


class FiniteLattice:
    """A finite lattice given by its order; ``up[i]`` is the set of ``j >= i``.

    Join and meet tables are computed once on construction; a ValidationError
    is raised if the order is not a lattice.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        self.universe = Universe(tuple(labels))
        self.order = Quasiorder(self.universe, up)
        for i, row in enumerate(self.order.rows):
            if row & self.order.down[i] != 1 << i:
                raise ValidationError("order is not antisymmetric")
        self.up = self.order.rows
        self.down = self.order.down
        k = len(labels)
        self.size = k
        join = np.empty((k, k), dtype=np.int16)
        meet = np.empty((k, k), dtype=np.int16)
        for i in range(k):
            for j in range(i, k):
                join[i, j] = join[j, i] = self._least(self.up[i] & self.up[j], i, j)
                meet[i, j] = meet[j, i] = self._greatest(self.down[i] & self.down[j], i, j)
        self.join_table = join
        self.meet_table = meet
        full = self.universe.full
        self.bottom = next(i for i in range(k) if self.up[i] == full)
        self.top = next(i for i in range(k) if self.down[i] == full)

    def _least(self, ub: int, i: int, j: int) -> int:
        for c in iter_bits(ub):
            if ub & ~self.up[c] == 0:
                return c
        raise ValidationError(f"no join for {self.label(i)}, {self.label(j)}")

    def _greatest(self, lb: int, i: int, j: int) -> int:
        for c in iter_bits(lb):
            if lb & ~self.down[c] == 0:
                return c
        raise ValidationError(f"no meet for {self.label(i)}, {self.label(j)}")

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> "FiniteLattice":
        """Build from Hasse pairs ``(x, y)`` meaning ``y`` covers ``x``."""
        u = Universe(tuple(labels))
        rows = [1 << i for i in range(u.n)]
        for x, y in covers:
            rows[u.index(x)] |= 1 << u.index(y)
        return cls(labels, transitive_closure(rows))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.universe.labels

    def label(self, i: int) -> str:
        return self.universe.labels[i]

    def index(self, x) -> int:
        return self.universe.index(x)

    def __len__(self) -> int:
        return self.size

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def join_all(self, elems: Iterable[int]) -> int:
        acc = self.bottom
        for e in elems:
            acc = self.join(acc, e)
        return acc

    def atoms(self) -> list[int]:
        """Elements covering the bottom."""
        b = self.bottom
        return [i for i in range(self.size) if i != b and self.down[i] == (1 << i) | (1 << b)]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse pairs ``(i, j)`` with ``j`` covering ``i``."""
        out = []
        for i in range(self.size):
            strict = self.up[i] & ~(1 << i)
            for j in iter_bits(strict):
                if all(not (self.up[k] >> j & 1) for k in iter_bits(strict & ~(1 << j))):
                    out.append((i, j))
        return out

    def is_distributive(self) -> bool:
        """``x & (y | z) == (x & y) | (x & z)`` for every triple."""
        J, M = self.join_table, self.meet_table
        x = np.arange(self.size)[:, None, None]
        lhs = M[x, J[None, :, :]]
        rhs = J[M[:, :, None], M[:, None, :]]
        return bool(np.array_equal(lhs, rhs))

    def complements(self, i: int) -> list[int]:
        return [
            j
            for j in range(self.size)
            if self.meet(i, j) == self.bottom and self.join(i, j) == self.top
        ]

    def is_uniquely_complemented(self) -> bool:
        return all(len(self.complements(i)) == 1 for i in range(self.size))

    def is_boolean(self) -> bool:
        """Distributive with a unique complement for every element."""
        return self.is_distributive() and self.is_uniquely_complemented()

    def is_atomistic(self) -> bool:
        """Every element is the join of the atoms below it."""
        atoms = self.atoms()
        return all(
            self.join_all(a for a in atoms if self.down[x] >> a & 1) == x
            for x in range(self.size)
        )

    def positive_part(self) -> Quasiorder:
        """The order restricted to the nonzero elements."""
        if self.size < 2:
            raise ValidationError("trivial lattice has no nonzero elements")
        keep = [i for i in range(self.size) if i != self.bottom]
        return self.order.restrict(keep)

    def upset_bits(self, i: int) -> int:
        return self.up[i]


def order_isomorphism(A: FiniteLattice, B: FiniteLattice) -> dict[int, int] | None:
    """Backtracking search for an order isomorphism between two finite lattices."""
    n = A.size
    if B.size != n:
        return None
    sig_a = [(_popcount(A.down[i]), _popcount(A.up[i])) for i in range(n)]
    sig_b = [(_popcount(B.down[i]), _popcount(B.up[i])) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    order = sorted(range(n), key=lambda i: sig_a[i])
    by_sig: dict = {}
    for j in range(n):
        by_sig.setdefault(sig_b[j], []).append(j)
    image: dict[int, int] = {}
    used = 0

    def ok(i: int, j: int) -> bool:
        for k, m in image.items():
            if bool(A.up[i] >> k & 1) != bool(B.up[j] >> m & 1):
                return False
            if bool(A.up[k] >> i & 1) != bool(B.up[m] >> j & 1):
                return False
        return True

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        i = order[pos]
        for j in by_sig[sig_a[i]]:
            if used >> j & 1 or not ok(i, j):
                continue
            image[i] = j
            used |= 1 << j
            if extend(pos + 1):
                return True
            del image[i]
            used &= ~(1 << j)
        return False

    return dict(image) if extend(0) else None


def _family_order(bitsets: Sequence[int]) -> list[int]:
    return [sum(1 << j for j, b in enumerate(bitsets) if a & ~b == 0) for a in bitsets]


@dataclass(frozen=True)
class SetLattice:
    """A family of subsets ordered by inclusion, optionally orthocomplemented."""

    universe: Universe
    family: tuple[Subset, ...]
    ortho: Mapping[int, int] | None = None

    def __post_init__(self):
        fam = tuple(sorted({X.bits: X for X in self.family}.values(), key=lambda X: (len(X), X.key())))
        object.__setattr__(self, "family", fam)
        bits = {X.bits for X in fam}
        if 0 not in bits or self.universe.full not in bits:
            raise ValidationError("set lattice must contain the empty set and the universe")
        if self.ortho is not None:
            if set(self.ortho) != bits or not set(self.ortho.values()) <= bits:
                raise ValidationError("orthocomplement must map the family into itself")

    def bitsets(self) -> list[int]:
        return [X.bits for X in self.family]

    def __len__(self) -> int:
        return len(self.family)

    def __contains__(self, X: Subset) -> bool:
        return X in self.family

    def lattice(self) -> FiniteLattice:
        bs = self.bitsets()
        return FiniteLattice([repr(X) for X in self.family], _family_order(bs))

    def join(self, X: Subset, Y: Subset) -> Subset:
        L, idx = self.lattice(), {X.bits: i for i, X in enumerate(self.family)}
        return self.family[L.join(idx[X.bits], idx[Y.bits])]

    def meet(self, X: Subset, Y: Subset) -> Subset:
        L, idx = self.lattice(), {X.bits: i for i, X in enumerate(self.family)}
        return self.family[L.meet(idx[X.bits], idx[Y.bits])]

    def atoms(self) -> list[Subset]:
        L = self.lattice()
        return [self.family[i] for i in L.atoms()]

    def complement_of(self, X: Subset) -> Subset:
        if self.ortho is None:
            raise ValidationError("no orthocomplement map")
        return Subset(self.universe, self.ortho[X.bits])


def upper_definable(R: Tolerance) -> SetLattice:
    """All upper approximations, built as the union-closure of the neighbourhoods."""
    fam = {0}
    for r in set(R.rows):
        fam |= {f | r for f in fam}
    full = R.universe.full
    ortho = {f: upper_bits(R, full & ~f) for f in fam}
    return SetLattice(R.universe, tuple(Subset(R.universe, f) for f in fam), ortho)


def lower_definable(R: Tolerance) -> SetLattice:
    """All lower approximations: complements of the upper ones."""
    full = R.universe.full
    fam = {full & ~X.bits for X in upper_definable(R).family}
    ortho = {f: lower_bits(R, full & ~f) for f in fam}
    return SetLattice(R.universe, tuple(Subset(R.universe, f) for f in fam), ortho)


def brute_force_upper_family(R: Tolerance) -> set[int]:
    n = R.n
    up = [0] * (1 << n)
    for X in range(1, 1 << n):
        low = (X & -X).bit_length() - 1
        up[X] = up[X & (X - 1)] | R.rows[low]
    return set(up)


def brute_force_lower_family(R: Tolerance) -> set[int]:
    return {lower_bits(R, X) for X in range(1 << R.n)}


def is_ortholattice(L: SetLattice) -> bool:
    """Involutive, order-reversing, and a lattice complement pointwise."""
    if L.ortho is None:
        raise ValidationError("set lattice has no orthocomplement map")
    lat = L.lattice()
    bs = L.bitsets()
    idx = {b: i for i, b in enumerate(bs)}
    perp = [idx[L.ortho[b]] for b in bs]
    for i, b in enumerate(bs):
        if perp[perp[i]] != i:
            return False
        if lat.meet(i, perp[i]) != lat.bottom or lat.join(i, perp[i]) != lat.top:
            return False
        for j in iter_bits(lat.up[i]):
            if not lat.leq(perp[j], perp[i]):
                return False
    return True


def is_atomistic(L: SetLattice | FiniteLattice) -> bool:
    lat = L.lattice() if isinstance(L, SetLattice) else L
    return lat.is_atomistic()


def is_boolean(L: SetLattice | FiniteLattice) -> bool:
    lat = L.lattice() if isinstance(L, SetLattice) else L
    return lat.is_boolean()


@dataclass(frozen=True)
class FormalContext:
    objects: Universe
    attributes: Universe
    incidence: tuple[int, ...]  # incidence[g] = attributes of object g

    def __post_init__(self):
        object.__setattr__(self, "incidence", tuple(self.incidence))
        if len(self.incidence) != self.objects.n:
            raise ValidationError("one incidence row per object required")
        if any(r < 0 or r > self.attributes.full for r in self.incidence):
            raise ValidationError("incidence row out of range")

    @classmethod
    def complement_of(cls, R: Tolerance) -> "FormalContext":
        """The context (U, U, not-R)."""
        full = R.universe.full
        return cls(R.universe, R.universe, tuple(full & ~r for r in R.rows))

    def intent_of(self, extent: int) -> int:
        out = self.attributes.full
        for g in iter_bits(extent):
            out &= self.incidence[g]
        return out

    def extent_of(self, intent: int) -> int:
        return sum(1 << g for g, row in enumerate(self.incidence) if intent & ~row == 0)

    def close(self, extent: int) -> int:
        return self.extent_of(self.intent_of(extent))


@dataclass(frozen=True)
class Concept:
    extent: Subset
    intent: Subset


def concepts(K: FormalContext) -> list[Concept]:
    """All formal concepts, ordered by extent (size, then labels)."""
    start = K.close(0)
    seen = {start}
    stack = [start]
    full = K.objects.full
    while stack:
        E = stack.pop()
        for g in iter_bits(full & ~E):
            F = K.close(E | 1 << g)
            if F not in seen:
                seen.add(F)
                stack.append(F)
    out = [Concept(Subset(K.objects, e), Subset(K.attributes, K.intent_of(e))) for e in seen]
    out.sort(key=lambda c: (len(c.extent), c.extent.key()))
    return out


def concept_lattice(K: FormalContext) -> FiniteLattice:
    cs = concepts(K)
    ext = [c.extent.bits for c in cs]
    labels = [f"{c.extent!r}|{c.intent!r}" for c in cs]
    return FiniteLattice(labels, _family_order(ext))


def check_c1_c2_c3(R: Tolerance, isomorphisms: bool = True) -> EquivalenceReport:
    """Irredundant-covering induced  <=>  both approximation lattices atomistic Boolean
    <=>  concept lattice of (U, U, not-R) atomistic Boolean.

    With ``isomorphisms`` the three lattices are also checked to be pairwise
    order-isomorphic by explicit search.
    """
    char = check_characterization(R)
    up_l = upper_definable(R).lattice()
    low_l = lower_definable(R).lattice()
    con_l = concept_lattice(FormalContext.complement_of(R))
    c2 = up_l.is_atomistic() and up_l.is_boolean() and low_l.is_atomistic() and low_l.is_boolean()
    c3 = con_l.is_atomistic() and con_l.is_boolean()
    details: dict = {"characterization_consistent": char.consistent}
    if isomorphisms:
        details["upper_lower_isomorphic"] = order_isomorphism(up_l, low_l) is not None
        details["lower_concepts_isomorphic"] = order_isomorphism(low_l, con_l) is not None
        details["upper_concepts_isomorphic"] = order_isomorphism(up_l, con_l) is not None
    return EquivalenceReport(
        "c1c2c3",
        {
            "induced_by_irredundant_covering": char["induced_by_irredundant_covering"],
            "approximation_lattices_atomistic_boolean": c2,
            "concept_lattice_atomistic_boolean": c3,
        },
        details,
    )


def bowtie_tolerance(L: FiniteLattice) -> Tolerance:
    """On the nonzero elements: related iff they share a nonzero lower bound."""
    if L.size < 2:
        raise ValidationError("the trivial lattice has no nonzero elements")
    keep = [i for i in range(L.size) if i != L.bottom]
    u = Universe(tuple(L.label(i) for i in keep))
    nonzero = L.universe.full & ~(1 << L.bottom)
    rows = []
    for x in keep:
        row = 0
        for k, y in enumerate(keep):
            if L.down[x] & L.down[y] & nonzero:
                row |= 1 << k
        rows.append(row)
    R = Tolerance(u, rows)
    assert R == tolerance_of(L.positive_part())
    return R


def check_distributive_corollary(L: FiniteLattice, cap: int = DEFAULT_BLOCK_CAP) -> EquivalenceReport:
    """For a finite distributive lattice: Helly number 2 on the nonzero part  <=>
    at most two atoms  <=>  blocks of the bowtie tolerance are the atom upsets."""
    if not L.is_distributive():
        raise ValidationError("lattice is not distributive")
    plus = L.positive_part()
    atoms = L.atoms()
    R = bowtie_tolerance(L)
    keep = [i for i in range(L.size) if i != L.bottom]
    pos = {i: k for k, i in enumerate(keep)}
    atom_ups = frozenset(sum(1 << pos[j] for j in iter_bits(L.up[a])) for a in atoms)
    return EquivalenceReport(
        "distributive_corollary",
        {
            "helly_number_2": has_helly2(plus, cap),
            "at_most_two_atoms": len(atoms) <= 2,
            "blocks_are_atom_upsets": blocks(R, cap).bitsets() == atom_ups,
        },
        {"atoms": [L.label(a) for a in atoms]},
    )


def downset_lattice(P: Quasiorder) -> FiniteLattice:
    """Distributive lattice of the downsets of a finite poset, ordered by inclusion."""
    n = P.n
    downs = []
    for D in range(1 << n):
        if all(P.down[x] & ~D == 0 for x in iter_bits(D)):
            downs.append(D)
    downs.sort(key=lambda d: (_popcount(d), [P.universe.labels[i] for i in iter_bits(d)]))
    labels = ["{" + ",".join(sorted(P.universe.labels[i] for i in iter_bits(d))) + "}" for d in downs]
    return FiniteLattice(labels, _family_order(downs))


def boolean_lattice(k: int) -> FiniteLattice:
    """The power set of a k-element set."""
    if k < 1:
        return FiniteLattice(["{}"], [1])
    u = Universe.letters(k)
    return downset_lattice(Quasiorder(u, [1 << i for i in range(k)]))


def chain_lattice(length: int) -> FiniteLattice:
    """A chain with ``length + 1`` elements."""
    if length < 1:
        return FiniteLattice(["0"], [1])
    u = Universe.letters(length)
    rows = [sum(1 << j for j in range(i, length)) for i in range(length)]
    return downset_lattice(Quasiorder(u, rows))


def atoms_are_block_neighborhoods(R: Tolerance) -> bool:
    """Atoms of the upper-approximation lattice equal the neighbourhoods that are blocks."""
    atoms = {X.bits for X in upper_definable(R).atoms()}
    hoods = {r for r in R.rows if block_bits(R, r)}
    return atoms == hoods

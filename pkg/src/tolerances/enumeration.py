"""Exhaustive generators of small combinatorial structures."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from .relation import Quasiorder, Tolerance, Universe, transitive_closure


def all_tolerances(n: int) -> Iterator[Tolerance]:
    """Every tolerance on the first n letters (2^(n choose 2) of them)."""
    u = Universe.letters(n)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Tolerance(u, rows)


def _reflexive_relations(n: int) -> Iterator[list[int]]:
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(off)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off):
            if mask >> k & 1:
                rows[i] |= 1 << j
        yield rows


def _transitive(rows: list[int]) -> bool:
    for row in rows:
        reach = 0
        r = row
        while r:
            low = r & -r
            reach |= rows[low.bit_length() - 1]
            r ^= low
        if reach & ~row:
            return False
    return True


def all_quasiorders(n: int) -> Iterator[Quasiorder]:
    """Every quasiorder on the first n letters (1, 4, 29, 355 for n = 1..4)."""
    u = Universe.letters(n)
    for rows in _reflexive_relations(n):
        if _transitive(rows):
            yield Quasiorder(u, rows)


def all_posets(n: int) -> Iterator[Quasiorder]:
    for Q in all_quasiorders(n):
        if all(up & down == 1 << i for i, (up, down) in enumerate(zip(Q.rows, Q.down))):
            yield Q


def _canonical(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    best = None
    for p in permutations(range(n)):
        image = [0] * n
        for i, row in enumerate(rows):
            r = 0
            for j in range(n):
                if row >> j & 1:
                    r |= 1 << p[j]
            image[p[i]] = r
        t = tuple(image)
        if best is None or t < best:
            best = t
    return best


def posets_up_to_isomorphism(n: int) -> list[Quasiorder]:
    """One representative per isomorphism class (1, 2, 5, 16 for n = 1..4)."""
    seen = {}
    for P in all_posets(n):
        key = _canonical(P.rows, n)
        seen.setdefault(key, P)
    u = Universe.letters(n)
    return [Quasiorder(u, key) for key in sorted(seen)]


def all_coverings(n: int) -> Iterator[tuple[int, ...]]:
    """Every family of nonempty subsets of an n-set whose union is everything,
    as tuples of bitsets in increasing order."""
    full = (1 << n) - 1
    subsets = list(range(1, full + 1))
    for mask in range(1, 1 << len(subsets)):
        fam = []
        union = 0
        m = mask
        while m:
            low = m & -m
            b = subsets[low.bit_length() - 1]
            fam.append(b)
            union |= b
            m ^= low
        if union == full:
            yield tuple(fam)


def random_tolerance(rng: random.Random, n: int, density: float | None = None) -> Tolerance:
    if density is None:
        density = rng.random()
    u = Universe(tuple(f"x{i}" for i in range(n)))
    rows = [1 << i for i in range(n)]
    for i, j in combinations(range(n), 2):
        if rng.random() < density:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Tolerance(u, rows)


def random_quasiorder(rng: random.Random, n: int, density: float | None = None) -> Quasiorder:
    if density is None:
        density = rng.random() * 0.5
    u = Universe(tuple(f"x{i}" for i in range(n)))
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                rows[i] |= 1 << j
    return Quasiorder(u, transitive_closure(rows))

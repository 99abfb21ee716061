"""Brute-force reference implementations written straight from the definitions.

Everything here works on plain ``dict[str, frozenset[str]]`` adjacency and
``frozenset`` families, and never calls into the package, so agreement with
the library is evidence rather than tautology.
"""

from __future__ import annotations

from itertools import chain, combinations


def powerset(xs):
    xs = list(xs)
    return (frozenset(c) for c in chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1)))


def as_adjacency(R) -> dict[str, frozenset[str]]:
    labels = R.universe.labels
    return {x: frozenset(y for y in labels if R.holds(x, y)) for x in labels}


def preblocks(adj):
    return [X for X in powerset(adj) if X and all(y in adj[x] for x in X for y in X)]


def blocks(adj) -> set[frozenset]:
    pre = preblocks(adj)
    return {X for X in pre if not any(X < Y for Y in pre)}


def upper(adj, X) -> frozenset:
    return frozenset(x for x in adj if adj[x] & X)


def lower(adj, X) -> frozenset:
    return frozenset(x for x in adj if adj[x] <= X)


def induced(universe, family) -> dict[str, frozenset[str]]:
    return {x: frozenset(y for S in family if x in S for y in S) for x in universe}


def irredundant_by_removal(universe, family) -> bool:
    """A covering is irredundant when no member can be dropped and still cover."""
    family = list(family)
    for i in range(len(family)):
        rest = family[:i] + family[i + 1:]
        if set().union(*rest) == set(universe):
            return False
    return True


def normal(universe, family) -> bool:
    """Normal means the family is exactly the block family of its induced tolerance."""
    return set(family) == blocks(induced(universe, family))


def leq(adj, x, y) -> bool:
    return adj[x] <= adj[y]


def minimal(adj) -> frozenset:
    return frozenset(x for x in adj if all(leq(adj, x, y) for y in adj if leq(adj, y, x)))


def has_lower_bound(order, xs) -> bool:
    return any(all(order(z, x) for x in xs) for z in order.universe)


class Order:
    def __init__(self, universe, le):
        self.universe = list(universe)
        self._le = le

    def __call__(self, x, y):
        return self._le(x, y)


def helly_number(order: Order) -> int:
    """Least k >= 1 such that every finite subset whose k-subsets all have lower
    bounds has a lower bound itself."""
    subsets = [S for S in powerset(order.universe) if S]
    bounded = {S: has_lower_bound(order, S) for S in subsets}
    for k in range(1, len(order.universe) + 1):
        ok = True
        for S in subsets:
            if bounded[S]:
                continue
            if all(bounded[frozenset(T)] for T in combinations(S, min(k, len(S)))):
                ok = False
                break
        if ok:
            return k
    return max(1, len(order.universe))


def definable_upper_family(adj) -> set[frozenset]:
    return {upper(adj, X) for X in powerset(adj)}


def definable_lower_family(adj) -> set[frozenset]:
    return {lower(adj, X) for X in powerset(adj)}


def canonical_bases(adj) -> list[set[frozenset]]:
    bl = sorted(blocks(adj), key=sorted)
    out = []
    for fam in powerset(range(len(bl))):
        F = [bl[i] for i in fam]
        if not F or induced(adj, F) != adj:
            continue
        if all(induced(adj, [F[j] for j in range(len(F)) if j != i]) != adj for i in range(len(F))):
            out.append(set(F))
    return out

"""Small named tolerances used in examples, tests and the CLI.

``graph_t1``
    Four points a, b, c, d with edges ab, ac, bc, cd. Its blocks are
    {a,b,c} and {c,d}; a, b and d are the minimal elements of the induced
    quasiorder, with a and b mutually below each other.

``path_t2``
    The path a - b - c - d. Its three blocks form the only canonical base,
    yet no irredundant covering induces it.

``helly_t3``
    Seven points a..g induced by the three sets {a,b,d,e}, {b,c,d,f} and
    {d,e,f,g} (the upsets of the minimal elements a, c and g). The pairwise
    intersections are {b,d}, {d,e} and {d,f}. The induced quasiorder is the
    cube 2^3 with its bottom removed: a, c, g are the atoms, b = a v c,
    e = a v g, f = c v g and d is the top. Any seven-point family with
    three minimal upsets meeting exactly in those intersections is this one
    up to relabelling, which is why the reconstruction is unique.

``subset_intersection(n)``
    Nonempty subsets of {1..n} (labelled by their digits, e.g. "13"),
    related iff they intersect. ``K_i`` is the set of labels containing i.
"""

from __future__ import annotations

from itertools import combinations

from .coverings import Covering, induced_tolerance
from .relation import Tolerance, Universe, tolerance_from_edges


def identity(labels="a b") -> Tolerance:
    return Tolerance.identity(Universe.of(labels))


def graph_t1() -> Tolerance:
    u = Universe.of("a b c d")
    return tolerance_from_edges(u, [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")], symmetrize=True)


def covering_h1() -> Covering:
    return Covering.from_labels(Universe.of("a b c d"), ["a b c", "c d"])


def path_t2() -> Tolerance:
    u = Universe.of("a b c d")
    return tolerance_from_edges(u, [("a", "b"), ("b", "c"), ("c", "d")], symmetrize=True)


def covering_h3() -> Covering:
    u = Universe.of("a b c d e f g")
    return Covering.from_labels(u, ["a b d e", "b c d f", "d e f g"])


def helly_t3() -> Tolerance:
    return induced_tolerance(covering_h3())


def nonempty_subsets(n: int = 3) -> Universe:
    digits = [str(i) for i in range(1, n + 1)]
    labels = ["".join(c) for k in range(1, n + 1) for c in combinations(digits, k)]
    return Universe(tuple(labels))


def subset_intersection(n: int = 3) -> Tolerance:
    u = nonempty_subsets(n)
    rows = []
    for x in u.labels:
        rows.append(sum(1 << j for j, y in enumerate(u.labels) if set(x) & set(y)))
    return Tolerance(u, rows)


def star_covering(n: int = 3) -> Covering:
    u = nonempty_subsets(n)
    return Covering.from_labels(
        u, [[x for x in u.labels if str(i) in x] for i in range(1, n + 1)]
    )


import pytest
from hypothesis import given, strategies as st

from tolerances import (
    Covering,
    SearchLimitExceeded,
    Universe,
    ValidationError,
    blocks,
    canonical_bases,
    induced_tolerance,
    irredundant_covering_of,
    is_canonical_base,
    is_irredundant,
    is_neighborhood_family,
    is_normal,
)
from tolerances.coverings import (
    exists_irredundant_covering_constructive,
    exists_irredundant_covering_exhaustive,
    normal_by_definition,
)
from tolerances.errors import UniverseTooLarge
from tolerances.enumeration import all_tolerances
from tolerances.fixtures import covering_h1, covering_h3, graph_t1, helly_t3, path_t2

import oracles
from conftest import tolerances


@st.composite
def coverings(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    u = Universe.letters(n)
    full = u.full
    fam = set(draw(st.lists(st.integers(1, full), min_size=1, max_size=6)))
    missing = full & ~sum_or(fam)
    if missing:
        fam.add(missing)
    return Covering.from_bitsets(u, fam)


def sum_or(bits):
    out = 0
    for b in bits:
        out |= b
    return out


def labels_family(H):
    return [frozenset(X) for X in H.sets]


class TestConstruction:
    def test_must_cover(self):
        with pytest.raises(ValidationError):
            Covering.from_labels(Universe.letters(3), [["a", "b"]])

    def test_rejects_empty_member(self):
        with pytest.raises(ValidationError):
            Covering.from_labels(Universe.letters(2), [["a", "b"], []])

    def test_duplicates_rejected_unless_dedup(self):
        u = Universe.letters(2)
        with pytest.raises(ValidationError):
            Covering.from_labels(u, [["a", "b"], ["b", "a"]])
        assert len(Covering.from_labels(u, [["a", "b"], ["b", "a"]], dedup=True)) == 1


def test_h1_induces_t1():
    assert induced_tolerance(covering_h1()) == graph_t1()


def test_h3_induces_t3_and_is_not_normal():
    H = covering_h3()
    assert induced_tolerance(H) == helly_t3()
    assert is_irredundant(H)
    assert not is_normal(H, oracle=True)


def test_t1_irredundant_covering():
    H = irredundant_covering_of(graph_t1())
    assert H.as_labels() == [["a", "b", "c"], ["c", "d"]]
    assert is_normal(H, oracle=True)


def test_t2_has_no_irredundant_covering_but_one_canonical_base():
    R = path_t2()
    assert irredundant_covering_of(R) is None
    bases = canonical_bases(R)
    assert [[X.labels for X in b] for b in bases] == [[("a", "b"), ("b", "c"), ("c", "d")]]
    assert is_canonical_base(bases[0], R)
    assert not is_neighborhood_family(Covering(R.universe, bases[0]), R)


def test_canonical_base_search_limit():
    with pytest.raises(SearchLimitExceeded):
        canonical_bases(helly_t3(), limit=8)


def test_normality_oracle_size_limit():
    u = Universe.letters(9)
    H = Covering.from_bitsets(u, [u.full])
    with pytest.raises(UniverseTooLarge):
        normal_by_definition(H)


@given(coverings())
def test_irredundant_matches_removal_definition(H):
    u = H.universe.labels
    assert is_irredundant(H) == oracles.irredundant_by_removal(u, labels_family(H))


@given(coverings())
def test_induced_matches_definition(H):
    R = induced_tolerance(H)
    expected = oracles.induced(H.universe.labels, labels_family(H))
    assert oracles.as_adjacency(R) == expected


@given(coverings())
def test_normal_matches_both_definitions(H):
    u = H.universe.labels
    expected = oracles.normal(u, labels_family(H))
    assert is_normal(H) == expected
    assert normal_by_definition(H) == expected


@given(coverings(max_n=5))
def test_irredundant_iff_neighbourhood_family(H):
    R = induced_tolerance(H)
    assert is_irredundant(H) == is_neighborhood_family(H, R)


@given(tolerances(max_n=6))
def test_canonical_bases_match_search(R):
    adj = oracles.as_adjacency(R)
    got = [set(frozenset(X) for X in b) for b in canonical_bases(R)]
    expected = oracles.canonical_bases(adj)
    assert sorted(map(sorted_family, got)) == sorted(map(sorted_family, expected))


def sorted_family(fam):
    return sorted(sorted(X) for X in fam)


@given(tolerances(max_n=7))
def test_block_family_is_normal(R):
    H = Covering(R.universe, list(blocks(R)))
    assert is_normal(H)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_constructive_and_exhaustive_search_agree(n):
    for R in all_tolerances(n):
        assert exists_irredundant_covering_exhaustive(R) == exists_irredundant_covering_constructive(R)
        assert (irredundant_covering_of(R) is not None) == exists_irredundant_covering_exhaustive(R)


def test_exhaustive_search_size_limit():
    R = next(all_tolerances(5))
    with pytest.raises(UniverseTooLarge):
        exists_irredundant_covering_exhaustive(R)

import pytest

from tolerances import (
    blocks,
    has_helly2,
    helly_number,
    induced_tolerance,
    is_block,
    is_irredundant,
    is_normal,
    quasiorder_of,
)
from tolerances.fixtures import helly_t3, subset_intersection, star_covering, nonempty_subsets
from tolerances.relation import find_isomorphism

import oracles


def test_universe_labels():
    assert nonempty_subsets(3).labels == ("1", "2", "3", "12", "13", "23", "123")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_each_star_is_a_block(n):
    R = subset_intersection(n)
    for K in star_covering(n):
        assert is_block(R, K)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stars_form_an_irredundant_covering_inducing_r(n):
    H = star_covering(n)
    assert is_irredundant(H)
    assert induced_tolerance(H) == subset_intersection(n)


def test_three_point_analog_has_a_fourth_block():
    # the pairs-and-whole family {12,13,23,123} is pairwise intersecting too
    R = subset_intersection(3)
    got = {frozenset(B) for B in blocks(R)}
    assert got == oracles.blocks(oracles.as_adjacency(R))
    assert len(got) == 4
    assert frozenset({"12", "13", "23", "123"}) in got
    assert not is_normal(star_covering(3))


def test_three_point_analog_is_the_seven_point_helly_example():
    assert find_isomorphism(subset_intersection(3), helly_t3()) is not None
    Q = quasiorder_of(subset_intersection(3))
    assert not has_helly2(Q)
    assert helly_number(Q) == 3


def test_two_point_analog_is_normal():
    R = subset_intersection(2)
    assert blocks(R).bitsets() == star_covering(2).bitsets()
    assert has_helly2(quasiorder_of(R))

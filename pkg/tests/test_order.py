import pytest
from hypothesis import given

from tolerances import (
    NeighborhoodPoset,
    Quasiorder,
    Universe,
    check_characterization,
    check_helly_theorem,
    check_main_equivalence,
    has_helly2,
    helly2_by_triples,
    helly_number,
    quasiorder_of,
    tolerance_of,
)
from tolerances.enumeration import all_tolerances
from tolerances.errors import UniverseTooLarge
from tolerances.fixtures import covering_h3, graph_t1, helly_t3, path_t2
from tolerances.order import NotIrredundantlyInduced, helly_holds_for, triple_condition

import oracles
from conftest import quasiorders, tolerances


def literal_helly(Q):
    return oracles.helly_number(oracles.Order(Q.universe.labels, Q.leq))


def antichain(n):
    u = Universe.letters(n)
    return Quasiorder(u, [1 << i for i in range(n)])


class TestHellyNumber:
    def test_antichain_of_three(self):
        # three incomparable points: every pair lacks a lower bound already
        assert helly_number(antichain(3)) == 2

    def test_single_point(self):
        assert helly_number(antichain(1)) == 1

    def test_t3_has_helly_number_three(self):
        Q = quasiorder_of(helly_t3())
        assert helly_number(Q) == 3
        assert not has_helly2(Q)
        assert not helly2_by_triples(Q)

    def test_t1_has_helly2(self):
        Q = quasiorder_of(graph_t1())
        assert helly_number(Q) <= 2 and has_helly2(Q) and helly2_by_triples(Q)

    def test_size_limit(self):
        with pytest.raises(UniverseTooLarge):
            helly_number(antichain(13))

    @given(quasiorders())
    def test_matches_literal_definition(self, Q):
        k = helly_number(Q)
        assert k == literal_helly(Q)
        assert helly_holds_for(Q, k)
        if k > 1:
            assert not helly_holds_for(Q, k - 1)

    @given(quasiorders())
    def test_three_helly2_tests_agree(self, Q):
        assert has_helly2(Q) == helly2_by_triples(Q) == (helly_number(Q) <= 2)


class TestNeighborhoodPoset:
    def test_t1_sets(self):
        P = NeighborhoodPoset(graph_t1())
        assert len(P) == 3  # R(a) = R(b)
        assert sorted(X.labels for X in P.subsets()) == [
            ("a", "b", "c"),
            ("a", "b", "c", "d"),
            ("c", "d"),
        ]


class TestCharacterization:
    def test_t1_positive(self):
        rep = check_characterization(graph_t1())
        assert rep.consistent and rep.value

    def test_t2_negative(self):
        rep = check_characterization(path_t2())
        assert rep.consistent and rep.value is False

    def test_method_switch(self):
        assert check_characterization(graph_t1()).details["method"] == "exhaustive"
        assert check_characterization(helly_t3()).details["method"] == "constructive"

    @given(quasiorders(max_n=5))
    def test_tolerance_of_quasiorder_is_characterised(self, Q):
        assert check_characterization(tolerance_of(Q)).consistent


class TestHellyTheorem:
    def test_t3_all_false(self):
        rep = check_helly_theorem(quasiorder_of(helly_t3()))
        assert rep.consistent and rep.value is False

    @given(quasiorders(max_n=6))
    def test_consistent(self, Q):
        assert check_helly_theorem(Q).consistent


class TestMain:
    def test_t1_all_true(self):
        rep = check_main_equivalence(graph_t1(), oracle=True)
        assert rep.consistent and rep.value
        assert rep.details["extra_blocks"] == []

    def test_t3_all_false_with_extra_block(self):
        rep = check_main_equivalence(helly_t3(), oracle=True)
        assert rep.consistent and rep.value is False
        assert rep.details["extra_blocks"] == [["b", "d", "e", "f"]]

    def test_t3_triple_condition_fails(self):
        assert not triple_condition(covering_h3())

    def test_requires_irredundant_covering(self):
        with pytest.raises(NotIrredundantlyInduced):
            check_main_equivalence(path_t2())

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_exhaustive_small(self, n):
        for R in all_tolerances(n):
            if check_characterization(R).value:
                assert check_main_equivalence(R, oracle=True).consistent

    @given(tolerances(max_n=8))
    def test_random(self, R):
        if check_characterization(R).value:
            assert check_main_equivalence(R, oracle=True).consistent

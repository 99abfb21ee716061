import pytest

from tolerances import ValidationError
from tolerances.enumeration import all_coverings, all_posets, all_quasiorders, all_tolerances, posets_up_to_isomorphism
from tolerances.verify import SUITES, run_suite


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_tolerance_counts(n, count):
    assert sum(1 for _ in all_tolerances(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_quasiorder_counts(n, count):
    assert sum(1 for _ in all_quasiorders(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 19), (4, 219)])
def test_labelled_poset_counts(n, count):
    assert sum(1 for _ in all_posets(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 16)])
def test_unlabelled_poset_counts(n, count):
    assert len(posets_up_to_isomorphism(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 5), (3, 109)])
def test_covering_counts(n, count):
    # families of distinct nonempty subsets whose union is the whole set
    assert sum(1 for _ in all_coverings(n)) == count


@pytest.mark.parametrize("name", list(SUITES))
def test_suites_pass_at_three(name):
    res = run_suite(name, 3)
    assert res.passed, res.failures[:5]
    assert res.total > 0


def test_suite_bounds():
    with pytest.raises(ValidationError):
        run_suite("helly", 0)
    with pytest.raises(ValidationError):
        run_suite("nope", 2)

import numpy as np
import pytest
from hypothesis import given

from src.errors import AntisymmetryViolation, MissingElement, ReflexivityViolation, TransitivityViolation, UnknownLabel
from src.orders import (
    SumSpec,
    antichain,
    chain,
    check_poset,
    iter_posets,
    one_plus_two,
    quotient_preorder,
    sum_over_index,
    validate_poset,
    validate_preorder,
)
from src.orders.poset import find_violation
from src.ordinals import two_bar_times_gamma

from .strategies import posets


def test_closure_of_cover_relation_is_chain():
    assert validate_poset(3, [(0, 1), (1, 2)], closure=True) == chain(3)


def test_empty_relation_closes_to_antichain():
    assert validate_poset(3, [], closure=True) == antichain(3)


def test_two_cycle_violates_antisymmetry():
    with pytest.raises(AntisymmetryViolation) as e:
        validate_poset(2, [(0, 1), (1, 0)])
    assert e.value.witness == (0, 1)


def test_missing_reflexive_pair_is_reported():
    violation = check_poset(2, [(0, 1)])
    assert isinstance(violation, ReflexivityViolation)
    assert violation.witness == (0, 0)


def test_missing_transitive_pair_is_reported():
    violation = check_poset(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    assert isinstance(violation, TransitivityViolation)
    assert violation.witness == (0, 1, 2)


def test_pair_outside_elements():
    with pytest.raises(MissingElement):
        validate_poset(2, [(0, 5)])
    with pytest.raises(MissingElement):
        validate_poset(['a', 'b'], [('a', 'c')], closure=True)


def test_labels_resolve_to_ids():
    poset = validate_poset(['bot', 'top'], [('bot', 'top')], closure=True)
    assert poset.lt(poset.index_of('bot'), poset.index_of('top'))
    with pytest.raises(UnknownLabel):
        poset.index_of('middle')


def test_one_plus_two_layout():
    p = one_plus_two()
    assert p.labels == ('0', '1', '*')
    assert p.strict_pairs() == [(0, 1)]
    assert p.incomparable(0, 2) and p.incomparable(1, 2)


def test_builtin_degenerate_sizes():
    assert chain(0).size == 0
    assert chain(1) == antichain(1)


def test_sum_of_singletons_has_index_shape():
    total = sum_over_index(SumSpec(antichain(2), (chain(1), chain(1))))
    assert np.array_equal(total.poset.le, antichain(2).le)
    assert total.poset.labels == ('0.0', '1.0')


def test_sum_of_antichains_over_antichain_is_antichain():
    total = sum_over_index(SumSpec(antichain(2), (antichain(2), antichain(2))))
    assert np.array_equal(total.poset.le, antichain(4).le)


def test_sum_over_chain_matches_layered_order():
    total = sum_over_index(SumSpec(chain(2), (antichain(2), antichain(2))))
    assert np.array_equal(total.poset.le, two_bar_times_gamma(2).materialize().le)
    assert total.id_of(1, 0) == 2
    assert total.project(3) == 1 and total.component(3) == 1


def test_sum_needs_one_summand_per_index():
    with pytest.raises(ValueError):
        SumSpec(chain(2), (chain(1),))


@given(posets(max_size=4))
def test_sum_with_singleton_summands_is_index(p):
    total = sum_over_index(SumSpec(p, tuple(chain(1) for _ in range(p.size))))
    assert np.array_equal(total.poset.le, p.le)


@given(posets(max_size=4))
def test_enumerated_posets_pass_axioms(p):
    assert find_violation(p.le) is None


def test_quotient_of_two_cycle_is_point():
    q = quotient_preorder(validate_preorder(2, [(0, 1), (1, 0)], closure=True))
    assert q.poset.size == 1
    assert q.projection == (0, 0)
    assert q.representatives == (0,)


def test_quotient_collapses_cycle_below_chain():
    order = validate_preorder(4, [(0, 1), (1, 0), (1, 2), (2, 3)], closure=True)
    q = quotient_preorder(order)
    assert np.array_equal(q.poset.le, chain(3).le)
    assert q.poset.labels == ('0', '2', '3')
    assert q.projection == (0, 0, 1, 2)
    assert find_violation(q.poset.le) is None


def test_quotient_of_poset_is_identity():
    q = quotient_preorder(one_plus_two())
    assert q.poset == one_plus_two()
    assert q.projection == (0, 1, 2)


@pytest.mark.parametrize('n, count', [(0, 1), (1, 1), (2, 3), (3, 19), (4, 219)])
def test_labelled_poset_counts(n, count):
    assert sum(1 for _ in iter_posets(n)) == count


@pytest.mark.slow
def test_labelled_poset_count_five():
    assert sum(1 for _ in iter_posets(5)) == 4231


def test_enumeration_has_no_duplicates():
    seen = {p.le.tobytes() for p in iter_posets(4)}
    assert len(seen) == 219

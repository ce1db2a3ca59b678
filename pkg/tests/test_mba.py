import pytest

from src.errors import BudgetExceeded, PostconditionViolation
from src.mba import (
    TriplePattern,
    bad_triples,
    build_fin_subset_order,
    check_strict_partial_order,
    check_wellfounded,
    minimal_bad_triple,
    strict_down_set,
)
from src.mba import triples as triples_module
from src.mba.power import carrier_size, majorized, to_mask, up_masks
from src.orders import Width2Kind, antichain, chain, classify_width2, iter_posets_upto, one_plus_two, validate_poset

from . import oracles


def _three_layers():
    # ⊥ < a, b, c < 0, 1, ★，且 0 < 1
    labels = ['bot', 'a', 'b', 'c', '0', '1', '*']
    pairs = [('bot', x) for x in 'abc'] + [(x, y) for x in 'abc' for y in ('0', '1', '*')] + [('0', '1')]
    return validate_poset(labels, pairs, closure=True)


def test_carrier_is_all_small_nonempty_subsets():
    order = build_fin_subset_order(one_plus_two(), 2)
    assert order.size == carrier_size(3, 2) == 6
    assert order.carrier[0] == (0,)


def test_precedes_in_one_plus_two():
    order = build_fin_subset_order(one_plus_two(), 3)
    assert order.precedes((0,), (1,))
    assert not order.precedes((1,), (0,))
    assert order.precedes((0,), (0, 1))
    assert not order.precedes((2,), (0, 1))


def test_subset_order_limits():
    with pytest.raises(ValueError):
        build_fin_subset_order(chain(2), 0)
    with pytest.raises(BudgetExceeded):
        build_fin_subset_order(antichain(8), 3, max_carrier=10)


def test_subset_order_over_all_small_posets():
    for q in iter_posets_upto(4):
        if not q.size:
            continue
        for n in (1, 2, 3):
            order = build_fin_subset_order(q, n)
            assert check_strict_partial_order(order).ok
            assert check_wellfounded(order).ok


def test_bad_triples_of_small_orders():
    assert [t.pattern for t in bad_triples(antichain(3))] == [TriplePattern.ANTICHAIN_3]
    assert bad_triples(chain(3)) == []
    assert [t.elements for t in bad_triples(one_plus_two())] == [(0, 1, 2)]


def test_bad_triple_budget():
    with pytest.raises(BudgetExceeded):
        bad_triples(antichain(5), budget=10)


def test_minimal_bad_triple_of_one_plus_two():
    triple = minimal_bad_triple(one_plus_two())
    assert triple.elements == (0, 1, 2)
    assert set(triple.labels) == {'*', '0', '1'}
    assert triple.pattern is TriplePattern.ONE_PLUS_TWO


def test_no_bad_triple_in_chain():
    assert minimal_bad_triple(chain(4)) is None


def test_minimal_bad_triple_prefers_lower_layer():
    q = _three_layers()
    assert [t.labels for t in bad_triples(q)] == [('a', 'b', 'c'), ('0', '1', '*')]
    triple = minimal_bad_triple(q)
    assert triple.labels == ('a', 'b', 'c')
    assert triple.pattern is TriplePattern.ANTICHAIN_3
    down = strict_down_set(q, triple.elements)
    assert down.poset.labels == ('bot',)
    assert bad_triples(down.poset) == []


def test_strict_down_set_accepts_labels():
    down = strict_down_set(one_plus_two(), ['1'])
    assert down.elements == (0,)
    assert down.poset.labels == ('0',)


@pytest.mark.slow
def test_minimal_bad_triple_has_no_bad_triples_below():
    for q in iter_posets_upto(5):
        triple = minimal_bad_triple(q)
        expected = [t for t in ((a, b, c) for a in range(q.size) for b in range(a + 1, q.size)
                                for c in range(b + 1, q.size)) if oracles.is_bad_triple(q, t)]
        assert [t.elements for t in bad_triples(q)] == expected
        if triple is None:
            assert not expected
            continue
        down = strict_down_set(q, triple.elements)
        assert bad_triples(down.poset) == []


@pytest.mark.slow
def test_bad_triples_below_every_bad_triple_are_majorized():
    for q in iter_posets_upto(5):
        up = up_masks(q)
        for b in bad_triples(q):
            down = strict_down_set(q, b.elements)
            for a in bad_triples(down.poset):
                original = [down.elements[p] for p in a.elements]
                assert majorized(to_mask(original), to_mask(b.elements), up), (q.to_dict(), b.labels, original)


@pytest.mark.slow
def test_no_bad_triples_exactly_for_sums_of_pairs():
    for q in iter_posets_upto(5):
        kind = classify_width2(q).kind
        assert (not bad_triples(q)) == (kind is Width2Kind.LINEAR_SUM_OF_PAIRS), q.to_dict()


def test_strict_down_set_reports_triple_not_below(monkeypatch):
    monkeypatch.setattr(triples_module, 'majorized', lambda a, b, up: False)
    with pytest.raises(PostconditionViolation) as e:
        strict_down_set(_three_layers(), ['0', '1', '*'])
    assert e.value.witness == ['a', 'b', 'c']


def test_minimal_bad_triple_reports_missing_minimum(monkeypatch):
    monkeypatch.setattr(triples_module, 'majorized', lambda a, b, up: True)
    with pytest.raises(PostconditionViolation):
        minimal_bad_triple(one_plus_two())

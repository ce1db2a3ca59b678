import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.errors import BoundExceeded, UnknownLabel
from src.hsets import (
    EMPTY,
    antichain3_check,
    antichain_ground,
    dag_size,
    ddot,
    dot,
    h_leq,
    mk_leaf,
    mk_set,
    relabel,
    subterms,
    supp,
    tree_size,
    verify_interlocked,
)
from src.hsets.order import clear_memo
from src.orders import find_embedding, one_plus_two

from . import oracles
from .strategies import posets, terms


def test_structurally_equal_terms_share_id():
    a, b = mk_leaf('0'), mk_leaf('*')
    assert mk_set([a, b]) is mk_set([b, a])
    assert mk_set([a, a]) is mk_set([a])
    assert mk_set([]) is EMPTY


def test_leaf_label_checked_against_ground():
    assert mk_leaf('*', one_plus_two()) is mk_leaf('*')
    with pytest.raises(UnknownLabel):
        mk_leaf('z', one_plus_two())


def test_iterated_terms():
    assert supp(dot(3))[1] == frozenset({'*', '0'})
    assert supp(ddot(3))[1] == frozenset({'*', '1'})
    assert len(dot(2).children) == 4
    assert dot(1) in dot(2).children


@pytest.mark.parametrize('n', [0, 1, 5, 20])
def test_iterated_terms_stay_small_when_shared(n):
    assert dag_size(dot(n)) == n + 3
    assert tree_size(dot(n)) == 3 * 2 ** n


def test_iterated_terms_bounds():
    with pytest.raises(BoundExceeded):
        dot(65)
    with pytest.raises(BoundExceeded):
        ddot(5, max_index=4)
    with pytest.raises(ValueError):
        dot(-1)


def test_relabel_swaps_atoms():
    assert relabel(dot(2), {'*': '*', '0': '1'}) is ddot(2)


def test_subterms_children_first():
    order = subterms(dot(1))
    assert order[-1] is dot(1)
    assert order.index(dot(0)) < order.index(dot(1))


def test_unknown_label_in_comparison():
    with pytest.raises(UnknownLabel):
        h_leq(mk_leaf('z'), mk_leaf('0'), one_plus_two())


def test_empty_set_is_below_everything():
    ground = one_plus_two()
    assert h_leq(EMPTY, dot(0), ground)
    assert h_leq(EMPTY, mk_leaf('0'), ground)
    assert not h_leq(dot(0), EMPTY, ground)


def test_three_element_antichain():
    report = antichain3_check()
    assert report.verdict == 'antichain'
    assert len(report.comparisons) == 6
    assert not any(r for _, _, r in report.comparisons)


def test_interlocked_copies():
    report = verify_interlocked(12)
    assert report.ok, report.violations
    assert report.checked == 13 * 13 * 4
    ground = one_plus_two()
    for m in range(4):
        for n in range(4):
            assert not h_leq(ddot(m), dot(n), ground)


def test_interlocked_copies_over_antichain():
    report = verify_interlocked(6, antichain_ground())
    assert report.ok, report.violations
    assert not h_leq(dot(0), ddot(3), antichain_ground())


def test_memo_does_not_change_answers():
    ground = one_plus_two()
    before = h_leq(dot(4), ddot(6), ground)
    clear_memo()
    assert h_leq(dot(4), ddot(6), ground) == before == oracles.h_leq(dot(4), ddot(6), ground)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_comparison_agrees_with_unmemoized_recursion(data):
    ground = data.draw(posets(min_size=1, max_size=4))
    x, y = data.draw(terms(ground)), data.draw(terms(ground))
    assert h_leq(x, y, ground) == oracles.h_leq(x, y, ground)


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_support_is_monotone(data):
    ground = data.draw(posets(min_size=1, max_size=4))
    x, y = data.draw(terms(ground)), data.draw(terms(ground))
    if h_leq(x, y, ground):
        assert h_leq(supp(x)[0], supp(y)[0], ground)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_children_are_below_parent(data):
    ground = data.draw(posets(min_size=1, max_size=4))
    a = data.draw(terms(ground))
    for child in a.children:
        assert h_leq(child, a, ground)


@settings(max_examples=500, deadline=None)
@given(st.data())
def test_reflexive(data):
    ground = data.draw(posets(min_size=1, max_size=4))
    x = data.draw(terms(ground))
    assert h_leq(x, x, ground)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_transitive(data):
    ground = data.draw(posets(min_size=1, max_size=4))
    x, y, z = (data.draw(terms(ground)) for _ in range(3))
    # x ∈ y2 ∈ z2
    y2 = mk_set([x, y])
    z2 = mk_set([y2, z])
    assert h_leq(x, y2, ground) and h_leq(y2, z2, ground)
    assert h_leq(x, z2, ground)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_embedding_preserves_order(data):
    source = data.draw(posets(min_size=1, max_size=3))
    target = data.draw(posets(min_size=source.size, max_size=4))
    embedding = find_embedding(source, target)
    assume(embedding is not None)
    mapping = {source.label(i): target.label(j) for i, j in enumerate(embedding.mapping)}
    x, y = data.draw(terms(source)), data.draw(terms(source))
    assert h_leq(x, y, source) == h_leq(relabel(x, mapping), relabel(y, mapping), target)

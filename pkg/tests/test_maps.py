import pytest
from hypothesis import given, settings

from src.errors import SearchBudgetExceeded
from src.orders import antichain, chain, find_embedding, find_order_reflecting, one_plus_two

from . import oracles
from .strategies import posets


def test_one_plus_two_does_not_embed_into_antichain():
    assert find_embedding(one_plus_two(), antichain(3)) is None


def test_one_plus_two_reflects_into_antichain():
    found = find_order_reflecting(one_plus_two(), antichain(3))
    assert found is not None and found.is_order_reflecting


def test_antichain_pair_embeds_as_zero_and_star():
    found = find_embedding(antichain(2), one_plus_two())
    assert found.mapping == (0, 2)
    assert found.is_embedding and found.is_injective


def test_chain_embeds_into_itself_by_identity():
    assert find_embedding(chain(3), chain(3)).mapping == (0, 1, 2)


def test_no_reflecting_map_from_one_plus_two_into_chain():
    assert find_order_reflecting(one_plus_two(), chain(3)) is None


def test_empty_source_has_empty_map():
    assert find_embedding(chain(0), one_plus_two()).mapping == ()


def test_budget_counts_all_candidate_maps():
    with pytest.raises(SearchBudgetExceeded) as e:
        find_embedding(chain(5), chain(5), budget=10)
    assert e.value.witness == {'candidates': 3125, 'budget': 10}


@settings(max_examples=60, deadline=None)
@given(posets(max_size=3), posets(max_size=4))
def test_embedding_search_agrees_with_exhaustive_check(p, q):
    found = find_embedding(p, q)
    assert (found is not None) == oracles.has_embedding(p, q)
    if found is not None:
        assert found.is_embedding
        assert find_order_reflecting(p, q) is not None


@settings(max_examples=60, deadline=None)
@given(posets(max_size=3), posets(max_size=4))
def test_reflecting_search_agrees_with_exhaustive_check(p, q):
    found = find_order_reflecting(p, q)
    assert (found is not None) == oracles.has_reflecting(p, q)
    if found is not None:
        assert found.is_order_reflecting


@pytest.mark.slow
def test_parallel_search_returns_serial_witness():
    p, q = antichain(2), one_plus_two()
    assert find_embedding(p, q, workers=2).mapping == find_embedding(p, q).mapping
    assert find_order_reflecting(one_plus_two(), antichain(3), workers=2).mapping == \
        find_order_reflecting(one_plus_two(), antichain(3)).mapping

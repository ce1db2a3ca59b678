import pytest

from src.errors import NotWidth2Decomposable
from src.orders import (
    Width2Kind,
    WitnessKind,
    antichain,
    chain,
    classify_width2,
    decompose,
    embed_into_two_times_gamma,
    incomparability_is_equivalence,
    iter_posets_upto,
    one_plus_two,
)
from src.orders.decomp import Decomposition, ForbiddenWitness
from src.ordinals import two_bar_times_gamma

from . import oracles


def test_incomparability_triple_in_one_plus_two():
    # 0 ∥ ★，★ ∥ 1，0 < 1
    assert incomparability_is_equivalence(one_plus_two()) == (0, 2, 1)


@pytest.mark.parametrize('poset', [chain(4), antichain(4), two_bar_times_gamma(3).materialize()])
def test_incomparability_is_equivalence_on_linear_sums(poset):
    assert incomparability_is_equivalence(poset) is None


def test_decompose_layers():
    d = decompose(two_bar_times_gamma(2).materialize())
    assert d.classes == ((0, 1), (2, 3))
    assert d.index == (0, 2)
    assert d.width == 2


def test_decompose_reports_one_plus_two():
    result = decompose(one_plus_two())
    assert isinstance(result, ForbiddenWitness)
    assert result.kind is WitnessKind.ONE_PLUS_TWO
    assert result.map.mapping == (0, 1, 2)
    assert result.map.is_embedding


def test_decompose_chain_into_singletons():
    d = decompose(chain(5))
    assert d.classes == tuple((k,) for k in range(5))


def test_reconstruct_is_isomorphism():
    d = decompose(two_bar_times_gamma(3).materialize())
    total, iso = d.reconstruct()
    assert iso.is_embedding
    assert sorted(iso.mapping) == list(range(total.size))


def test_classify_antichain_three():
    c = classify_width2(antichain(3))
    assert c.kind is Width2Kind.FORBIDDEN
    assert c.witness.kind is WitnessKind.ANTICHAIN_3
    assert c.witness.map.mapping == (0, 1, 2)


def test_classify_pairs():
    c = classify_width2(two_bar_times_gamma(3).materialize())
    assert c.is_linear_sum_of_pairs
    assert len(c.decomposition.classes) == 3


def test_classify_one_plus_two_is_forbidden():
    c = classify_width2(one_plus_two())
    assert c.kind is Width2Kind.FORBIDDEN
    assert c.witness.kind is WitnessKind.ONE_PLUS_TWO


def test_embed_into_layers():
    assert embed_into_two_times_gamma(antichain(2)).mapping == (0, 1)
    assert embed_into_two_times_gamma(chain(2)).mapping == (0, 2)
    m = embed_into_two_times_gamma(two_bar_times_gamma(2).materialize())
    assert m.mapping == (0, 1, 2, 3)
    assert m.is_embedding


def test_embed_rejects_wide_layer():
    with pytest.raises(NotWidth2Decomposable):
        embed_into_two_times_gamma(antichain(3))


@pytest.mark.slow
def test_trichotomy_over_all_small_posets():
    for p in iter_posets_upto(5):
        result = decompose(p)
        assert isinstance(result, Decomposition) != oracles.contains_one_plus_two(p)
        c = classify_width2(p)
        expected = not oracles.contains_one_plus_two(p) and not oracles.has_antichain(p, 3)
        assert c.is_linear_sum_of_pairs == expected
        assert c.is_linear_sum_of_pairs == (not oracles.has_reflecting(one_plus_two(), p))
        if c.is_linear_sum_of_pairs:
            assert embed_into_two_times_gamma(p).is_embedding
        else:
            assert c.witness.map.is_embedding

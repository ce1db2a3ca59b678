from itertools import combinations_with_replacement, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arrays import (
    ArrayFragment,
    PointwiseComparison,
    RankingRelation,
    SuffixRanking,
    classify_fragment,
    compare_pointwise,
    discrete_ranking,
    head_removal_derivation,
    induced_from_descending,
    iter_bad_fragments,
    iter_rankings,
    minimal_bad_search,
    stabilize_first_coordinate,
    stabilize_head,
    target_ranking,
)
from src.barriers import Fragment, uniform_fragment
from src.errors import (
    EmptyValueSequence,
    IncompatibleBases,
    IncompleteFragment,
    MemberNotFound,
    NotASumTarget,
    NotBad,
    NotDescending,
    NotStabilized,
    PostconditionViolation,
    SemanticError,
)
from src.orders import SumSpec, antichain, chain, iter_posets_upto, sum_over_index
from src.ordinals import decseq_to_cnf

SIGMAS = [(2, 2, 2), (2, 2, 1), (2, 2), (2, 1), (2,), (1, 1), (1,), (0, 0, 0), (0, 0), (0,)]


def _pipeline_array():
    return induced_from_descending(SIGMAS, range(10), chain(3))


def test_descending_sequences_give_bad_array():
    g = _pipeline_array()
    assert g((3,)) == (2, 1)
    assert classify_fragment(g).is_bad


def test_descent_must_be_strict():
    with pytest.raises(NotDescending) as e:
        induced_from_descending([(1,), (1,)], range(2), chain(2))
    assert e.value.witness == 1


def test_descent_needs_one_sequence_per_point():
    with pytest.raises(SemanticError):
        induced_from_descending([(1,), (0,)], range(3), chain(2))


def test_head_stabilizes_on_last_block():
    stab = stabilize_head(_pipeline_array())
    assert stab.member == (7,)
    assert stab.index == 0
    assert stab.tail.values == ((0, 0), (0,))
    assert not stab.degenerate


def test_head_removal_gives_smaller_bad_array():
    g = _pipeline_array()
    f = head_removal_derivation(g, (7,))
    assert f.domain.members == ((8,), (9,))
    assert f.values == ((0,), ())
    assert classify_fragment(f).is_bad
    assert compare_pointwise(f, g, SuffixRanking()) is PointwiseComparison.LT


def test_head_removal_errors():
    g = _pipeline_array()
    with pytest.raises(MemberNotFound):
        head_removal_derivation(g, (42,))
    with pytest.raises(NotStabilized):
        head_removal_derivation(g, (5,))
    with_empty = induced_from_descending([(1,), (0,), ()], range(3), chain(2))
    with pytest.raises(EmptyValueSequence):
        head_removal_derivation(with_empty, (0,))


def test_head_removal_reports_tail_not_below(monkeypatch):
    monkeypatch.setattr(SuffixRanking, 'lt', lambda self, a, b: False)
    with pytest.raises(PostconditionViolation) as e:
        head_removal_derivation(_pipeline_array(), (7,))
    assert e.value.witness == [8]


NONEMPTY = [s for k in (1, 2, 3) for s in combinations_with_replacement((2, 1, 0), k)]


@settings(max_examples=30, deadline=None)
@given(st.permutations(NONEMPTY).map(lambda p: p[:10]))
def test_pipeline_on_random_descending_lists(sequences):
    alpha = chain(3)
    sigmas = sorted(sequences, key=lambda s: decseq_to_cnf(s, alpha), reverse=True)
    g = induced_from_descending(sigmas, range(10), alpha)
    assert classify_fragment(g).is_bad
    stab = stabilize_head(g)
    f = head_removal_derivation(g, stab.member)
    assert classify_fragment(f).is_bad
    assert compare_pointwise(f, g, SuffixRanking()) is PointwiseComparison.LT


def _layered(index_size: int):
    return sum_over_index(SumSpec(chain(index_size), tuple(antichain(2) for _ in range(index_size))))


def test_first_coordinate_stabilizes():
    f = ArrayFragment(uniform_fragment(range(2), 1), (2, 3), _layered(2))
    stab = stabilize_first_coordinate(f)
    assert stab.member == (0,)
    assert stab.index == 1
    assert stab.tail.values == (1,)
    assert stab.tail.target == antichain(2)


def test_stabilize_requires_bad_array_into_sum():
    with pytest.raises(NotBad):
        stabilize_first_coordinate(ArrayFragment(uniform_fragment(range(2), 1), (2, 2), _layered(2)))
    with pytest.raises(NotASumTarget):
        stabilize_first_coordinate(ArrayFragment(uniform_fragment(range(2), 1), (0, 1), antichain(2)))
    with pytest.raises(SemanticError):
        stabilize_head(ArrayFragment(uniform_fragment(range(2), 1), (0, 1), antichain(2)))


def _array(values, target, base=3):
    return ArrayFragment(uniform_fragment(range(base), 1), values, target)


def test_pointwise_comparison():
    ranking = target_ranking(chain(3))
    low, high = _array((0, 0, 0), chain(3)), _array((1, 1, 1), chain(3))
    assert compare_pointwise(low, high, ranking) is PointwiseComparison.LT
    assert compare_pointwise(low, low, ranking) is PointwiseComparison.LEQ
    assert compare_pointwise(high, low, ranking) is PointwiseComparison.NEITHER


def test_pointwise_comparison_needs_shared_base():
    ranking = target_ranking(chain(3))
    with pytest.raises(IncompatibleBases):
        compare_pointwise(_array((0, 0, 0, 0), chain(3), base=4), _array((0, 0, 0), chain(3)), ranking)
    partial = ArrayFragment(Fragment((0, 1, 2), ((0,), (1,))), (0, 0), chain(3))
    with pytest.raises(IncompleteFragment):
        compare_pointwise(_array((0, 0, 0), chain(3)), partial, ranking)


def test_ranking_must_lie_inside_order():
    with pytest.raises(SemanticError):
        RankingRelation(antichain(2), np.array([[True, True], [False, True]]))


def test_rankings_of_chain():
    assert sum(1 for _ in iter_rankings(chain(3))) == 7
    assert sum(1 for _ in iter_rankings(antichain(3))) == 1


def test_minimal_search_descends():
    result = minimal_bad_search(_array((2, 1), chain(3), base=2), target_ranking(chain(3)))
    assert result.array.values == (1, 0)
    assert result.steps == 1


def test_discrete_ranking_keeps_array():
    f0 = _array((2, 1), chain(3), base=2)
    result = minimal_bad_search(f0, discrete_ranking(chain(3)))
    assert result.array.values == f0.values
    assert result.steps == 0


def test_minimal_search_over_suffixes():
    g = induced_from_descending([(1, 0), (0,)], range(2), chain(2))
    result = minimal_bad_search(g, SuffixRanking())
    assert result.array.values == ((0,), ())
    assert result.steps == 1


def test_minimal_search_rejects_good_array():
    with pytest.raises(NotBad):
        minimal_bad_search(_array((0, 0), chain(2), base=2), target_ranking(chain(2)))


def test_minimal_search_returns_vacuous_array():
    f0 = _array((0,), chain(2), base=1)
    result = minimal_bad_search(f0, target_ranking(chain(2)))
    assert result.degenerate and result.array is f0


def test_minimal_search_ranking_must_match_target():
    with pytest.raises(SemanticError):
        minimal_bad_search(_array((1, 0), chain(2), base=2), target_ranking(chain(3)))


@pytest.mark.slow
def test_minimal_bad_arrays_over_all_small_targets():
    fragment = uniform_fragment(range(4), 1)
    for target in iter_posets_upto(4):
        bad = list(iter_bad_fragments(fragment, target)) if target.size else []
        if not bad:
            continue
        f0 = bad[-1]
        for ranking in iter_rankings(target):
            g = minimal_bad_search(f0, ranking).array
            assert classify_fragment(g).is_bad
            assert compare_pointwise(g, f0, ranking) is not PointwiseComparison.NEITHER
            lower = [ranking.below(v, strict=True) for v in g.values]
            assert not any(classify_fragment(g.with_values(vs)).is_bad for vs in product(*lower))

"""
数组片段：好/坏判定、坏数组搜索、稳定化、部分排名与极小坏数组
"""

from .fragment_array import (
    ArrayFragment,
    Classification,
    Verdict,
    classify_fragment,
    first_coordinate_projection,
    induced_from_descending,
    shift_witness,
    transport_array,
)
from .search import ConstraintSearch, iter_bad_fragments, max_bad_horizon, search_bad_fragment
from .ranking import (
    PointwiseComparison,
    RankingRelation,
    SuffixRanking,
    compare_pointwise,
    discrete_ranking,
    iter_rankings,
    target_ranking,
)
from .sums import Stabilization, head_removal_derivation, stabilize_first_coordinate, stabilize_head
from .minimal import MinimalBadResult, minimal_bad_search

__all__ = [
    'ArrayFragment',
    'Classification',
    'Verdict',
    'classify_fragment',
    'first_coordinate_projection',
    'induced_from_descending',
    'shift_witness',
    'transport_array',
    'ConstraintSearch',
    'iter_bad_fragments',
    'max_bad_horizon',
    'search_bad_fragment',
    'PointwiseComparison',
    'RankingRelation',
    'SuffixRanking',
    'compare_pointwise',
    'discrete_ranking',
    'iter_rankings',
    'target_ranking',
    'Stabilization',
    'head_removal_derivation',
    'stabilize_first_coordinate',
    'stabilize_head',
    'MinimalBadResult',
    'minimal_bad_search',
]

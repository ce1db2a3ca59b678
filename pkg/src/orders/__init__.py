"""
有限偏序：构造、求和、映射搜索、分解
"""

from .poset import (
    STAR,
    Poset,
    Preorder,
    Quotient,
    SumOrder,
    SumSpec,
    antichain,
    builtin_order,
    chain,
    check_poset,
    one_plus_two,
    quotient_preorder,
    sum_over_index,
    validate_poset,
    validate_preorder,
)
from .maps import OrderMap, find_embedding, find_order_reflecting, is_embedding, is_order_reflecting
from .decomp import (
    Decomposition,
    ForbiddenWitness,
    Width2Classification,
    Width2Kind,
    WitnessKind,
    classify_width2,
    decompose,
    embed_into_two_times_gamma,
    incomparability_is_equivalence,
)
from .enumerate import iter_posets, iter_posets_upto

__all__ = [
    'STAR',
    'Poset',
    'Preorder',
    'Quotient',
    'SumOrder',
    'SumSpec',
    'antichain',
    'builtin_order',
    'chain',
    'check_poset',
    'one_plus_two',
    'quotient_preorder',
    'sum_over_index',
    'validate_poset',
    'validate_preorder',
    'OrderMap',
    'find_embedding',
    'find_order_reflecting',
    'is_embedding',
    'is_order_reflecting',
    'Decomposition',
    'ForbiddenWitness',
    'Width2Classification',
    'Width2Kind',
    'WitnessKind',
    'classify_width2',
    'decompose',
    'embed_into_two_times_gamma',
    'incomparability_is_equivalence',
    'iter_posets',
    'iter_posets_upto',
]

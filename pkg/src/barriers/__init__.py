"""
有限序列与 block / barrier 片段
"""

from .finseq import (
    FinSeq,
    as_finseq,
    enum,
    is_prefix,
    is_proper_prefix,
    is_proper_subset,
    triangle_lt,
    triangle_lt_by_extension,
)
from .fragment import (
    Fragment,
    FragmentKind,
    FragmentViolation,
    Refinement,
    ViolationKind,
    block_to_barrier,
    chain_intervals,
    sub_fragment_after,
    uniform_fragment,
    validate_fragment,
)

__all__ = [
    'FinSeq',
    'as_finseq',
    'enum',
    'is_prefix',
    'is_proper_prefix',
    'is_proper_subset',
    'triangle_lt',
    'triangle_lt_by_extension',
    'Fragment',
    'FragmentKind',
    'FragmentViolation',
    'Refinement',
    'ViolationKind',
    'block_to_barrier',
    'chain_intervals',
    'sub_fragment_after',
    'uniform_fragment',
    'validate_fragment',
]

"""
H_f(Q)：以 Q 的元素为原子的遗传有限集合及其序
"""

from .terms import (
    EMPTY,
    HTerm,
    TERMS,
    dag_size,
    ddot,
    dot,
    mk_leaf,
    mk_set,
    relabel,
    subterms,
    supp,
    to_text,
    tree_size,
)
from .order import (
    Antichain3Report,
    InterlockedReport,
    antichain3_check,
    antichain_ground,
    h_leq,
    verify_interlocked,
)

__all__ = [
    'EMPTY',
    'HTerm',
    'TERMS',
    'dag_size',
    'ddot',
    'dot',
    'mk_leaf',
    'mk_set',
    'relabel',
    'subterms',
    'supp',
    'to_text',
    'tree_size',
    'Antichain3Report',
    'InterlockedReport',
    'antichain3_check',
    'antichain_ground',
    'h_leq',
    'verify_interlocked',
]

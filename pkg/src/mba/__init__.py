"""
有限幂序 [Q]^{<=n}、坏三元组与 ≺-极小坏三元组
"""

from .power import (
    FinSubsetOrder,
    StrictOrderReport,
    WellFoundedReport,
    build_fin_subset_order,
    check_strict_partial_order,
    check_wellfounded,
)
from .triples import BadTriple, DownSet, TriplePattern, bad_triples, minimal_bad_triple, strict_down_set

__all__ = [
    'FinSubsetOrder',
    'StrictOrderReport',
    'WellFoundedReport',
    'build_fin_subset_order',
    'check_strict_partial_order',
    'check_wellfounded',
    'BadTriple',
    'DownSet',
    'TriplePattern',
    'bad_triples',
    'minimal_bad_triple',
    'strict_down_set',
]

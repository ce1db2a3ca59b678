"""
序数记号：Cantor 范式、2̄·γ、ω^α
"""

from .cnf import OMEGA, ONE, ZERO, Comparison, OrdinalCNF, check_cnf, cnf_add, cnf_compare, cnf_sum, to_text
from .omega import DecSeq, OmegaAlpha, decseq_to_cnf, head_remove, omega_alpha_compare, suffix_ranking
from .layers import EnumeratedSuborder, TwoBarTimesGamma, suborder_from_enumeration, two_bar_times_gamma

__all__ = [
    'OMEGA',
    'ONE',
    'ZERO',
    'Comparison',
    'OrdinalCNF',
    'check_cnf',
    'cnf_add',
    'cnf_compare',
    'cnf_sum',
    'to_text',
    'DecSeq',
    'OmegaAlpha',
    'decseq_to_cnf',
    'head_remove',
    'omega_alpha_compare',
    'suffix_ranking',
    'EnumeratedSuborder',
    'TwoBarTimesGamma',
    'suborder_from_enumeration',
    'two_bar_times_gamma',
]

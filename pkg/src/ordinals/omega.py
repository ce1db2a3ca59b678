"""
ω^α：线序 α 上弱递减的有限序列，按字典序比较

前缀约定：真前缀更小（序列结尾低于任何元素），
与把 ⟨σ0, σ1, ...⟩ 读成 ω^σ0 + ω^σ1 + ... 的序数含义一致
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import EmptySequence, EntryOutOfRange, NonLinearBase, NotDecreasing
from ..orders.poset import Poset
from .cnf import Comparison, OrdinalCNF, cnf_compare, cnf_sum

log = logging.getLogger(__name__)

Entry = Union[int, OrdinalCNF]
DecSeq = Tuple[Entry, ...]


@dataclass(frozen=True)
class OmegaAlpha:
    """
    ω^α 的比较器

    alpha 为 Poset 时条目是它的元素 id；alpha 为 None 时条目是 OrdinalCNF
    """
    alpha: Optional[Poset] = None

    def compare_entries(self, a: Entry, b: Entry) -> Comparison:
        if self.alpha is None:
            return cnf_compare(a, b)
        self._require_element(a)
        self._require_element(b)
        if a == b:
            return Comparison.EQ
        if self.alpha.lt(a, b):
            return Comparison.LT
        if self.alpha.lt(b, a):
            return Comparison.GT
        raise NonLinearBase(f"α 在 {a} 与 {b} 上不可比较", witness=(a, b))

    def _require_element(self, entry: Entry) -> None:
        if self.alpha is None:
            return
        if isinstance(entry, bool) or not isinstance(entry, (int, np.integer)) or not 0 <= entry < self.alpha.size:
            raise EntryOutOfRange(f"{entry!r} 不是 α 的元素（0..{self.alpha.size - 1}）", witness=entry)

    def check(self, sigma: Sequence[Entry]) -> DecSeq:
        """
        校验弱递减

        Raises:
            EntryOutOfRange: 条目不是 α 的元素 id
            NotDecreasing: witness 为第一个上升的位置
        """
        sigma = tuple(sigma)
        for entry in sigma:
            self._require_element(entry)
        for k in range(1, len(sigma)):
            if self.compare_entries(sigma[k - 1], sigma[k]) is Comparison.LT:
                raise NotDecreasing(f"序列在位置 {k} 上升: {sigma}", witness=k)
        return sigma

    def compare(self, sigma: Sequence[Entry], tau: Sequence[Entry]) -> Comparison:
        sigma, tau = self.check(sigma), self.check(tau)
        for a, b in zip(sigma, tau):
            result = self.compare_entries(a, b)
            if result is not Comparison.EQ:
                return result
        return Comparison.of(len(sigma), len(tau))

    def leq(self, sigma: Sequence[Entry], tau: Sequence[Entry]) -> bool:
        return self.compare(sigma, tau) is not Comparison.GT

    def lt(self, sigma: Sequence[Entry], tau: Sequence[Entry]) -> bool:
        return self.compare(sigma, tau) is Comparison.LT


def omega_alpha_compare(sigma: Sequence[Entry], tau: Sequence[Entry],
                        alpha: Optional[Poset] = None) -> Comparison:
    """
    ω^α 上的字典序比较

    Args:
        sigma, tau: 弱递减序列
        alpha: 线序 Poset；None 表示条目为 OrdinalCNF

    Returns:
        Comparison.LT / EQ / GT

    Raises:
        NotDecreasing, NonLinearBase
    """
    return OmegaAlpha(alpha).compare(sigma, tau)


def suffix_ranking(sigma: Sequence[Entry], tau: Sequence[Entry]) -> bool:
    """σ 是 τ 的后缀（可为空或等于 τ 本身）"""
    sigma, tau = tuple(sigma), tuple(tau)
    return len(sigma) <= len(tau) and tau[len(tau) - len(sigma):] == sigma


def head_remove(sigma: Sequence[Entry]) -> DecSeq:
    """
    去掉首项

    Raises:
        EmptySequence
    """
    sigma = tuple(sigma)
    if not sigma:
        raise EmptySequence("空序列没有首项")
    return sigma[1:]


def _rank_in(alpha: Poset, entry: int) -> int:
    return int(alpha.strict[:, entry].sum())


def decseq_to_cnf(sigma: Sequence[Entry], alpha: Optional[Poset] = None) -> OrdinalCNF:
    """
    把 ⟨σ0, σ1, ...⟩ 读成 ω^σ0 + ω^σ1 + ...

    alpha 为有限线序时条目按其在 α 中的位置取有限指数
    """
    sigma = OmegaAlpha(alpha).check(sigma)
    if alpha is None:
        return cnf_sum(OrdinalCNF.omega_power(e) for e in sigma)
    return cnf_sum(OrdinalCNF.omega_power(_rank_in(alpha, e)) for e in sigma)

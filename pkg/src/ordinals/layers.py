"""
2̄·γ：γ×2̄ 上的字典序（γ 在前），同层两点不可比较
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import SemanticError
from ..orders.maps import OrderMap
from ..orders.poset import Poset
from .cnf import Comparison, OrdinalCNF, cnf_compare

log = logging.getLogger(__name__)

Beta = Union[int, OrdinalCNF]
Point = Tuple[Beta, int]


def _as_cnf(value: Beta) -> OrdinalCNF:
    return OrdinalCNF.of(value) if isinstance(value, int) else value


@dataclass(frozen=True)
class TwoBarTimesGamma:
    """γ 为有限整数或 OrdinalCNF"""
    gamma: Beta

    @property
    def is_finite(self) -> bool:
        return isinstance(self.gamma, int) or self.gamma.is_finite

    @property
    def length(self) -> int:
        """有限 γ 的大小"""
        return self.gamma if isinstance(self.gamma, int) else int(self.gamma)

    def contains(self, point: Point) -> bool:
        beta, j = point
        return j in (0, 1) and cnf_compare(_as_cnf(beta), _as_cnf(self.gamma)) is Comparison.LT

    def compare(self, a: Point, b: Point) -> Comparison:
        """(β,j) < (β',j') 当且仅当 β < β'；β 相同而 j 不同时不可比较"""
        result = cnf_compare(_as_cnf(a[0]), _as_cnf(b[0]))
        if result is not Comparison.EQ:
            return result
        return Comparison.EQ if a[1] == b[1] else Comparison.INCOMPARABLE

    def leq(self, a: Point, b: Point) -> bool:
        return self.compare(a, b) in (Comparison.LT, Comparison.EQ)

    @staticmethod
    def id_of(beta: int, j: int) -> int:
        return 2 * beta + j

    def materialize(self) -> Poset:
        """有限 γ 展开为 Poset，(β, j) 的 id 为 2β+j"""
        if not self.is_finite:
            raise SemanticError(f"γ = {self.gamma} 不是有限序数，无法展开", witness=str(self.gamma))
        n = self.length
        le = np.zeros((2 * n, 2 * n), dtype=bool)
        for a in range(2 * n):
            for b in range(2 * n):
                le[a, b] = a // 2 < b // 2 or a == b
        labels = tuple(f"({beta},{j})" for beta in range(n) for j in (0, 1))
        return Poset(le, labels)


def two_bar_times_gamma(gamma: Beta) -> TwoBarTimesGamma:
    """
    构造 2̄·γ

    Args:
        gamma: 有限整数或 OrdinalCNF

    Returns:
        TwoBarTimesGamma，有限时可 materialize()
    """
    if isinstance(gamma, int) and gamma < 0:
        raise SemanticError(f"γ 不能为负: {gamma}", witness=gamma)
    return TwoBarTimesGamma(gamma)


@dataclass(frozen=True)
class EnumeratedSuborder:
    """枚举出的点（首次出现）构成的子序"""
    poset: Poset
    points: Tuple[Point, ...]
    embedding: Optional[OrderMap]

    def to_dict(self) -> Dict:
        return {
            'poset': self.poset.to_dict(),
            'points': [[str(beta), j] for beta, j in self.points],
            'embedding': self.embedding.to_dict() if self.embedding else None,
        }


def suborder_from_enumeration(order: TwoBarTimesGamma, points: Sequence[Point]) -> EnumeratedSuborder:
    """
    按首次出现去重，取 2̄·γ 的诱导子序

    γ 有限时同时给出到 materialize() 的嵌入

    Raises:
        SemanticError: 某点不在 2̄·γ 中
    """
    distinct: List[Point] = []
    for point in points:
        point = (point[0], int(point[1]))
        if not order.contains(point):
            raise SemanticError(f"{point} 不在 2̄·{order.gamma} 中", witness=[str(point[0]), point[1]])
        if all(order.compare(point, seen) is not Comparison.EQ for seen in distinct):
            distinct.append(point)
    n = len(distinct)
    le = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            le[a, b] = order.leq(distinct[a], distinct[b])
    poset = Poset(le, tuple(f"({beta},{j})" for beta, j in distinct))
    embedding = None
    if order.is_finite:
        target = order.materialize()
        embedding = OrderMap(poset, target, tuple(order.id_of(int(_as_cnf(beta)), j) for beta, j in distinct))
    log.debug("enumeration: %d 个点 -> %d 个不同元素", len(points), n)
    return EnumeratedSuborder(poset, tuple(distinct), embedding)

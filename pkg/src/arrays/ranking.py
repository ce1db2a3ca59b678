"""
部分排名 ≤′ 与数组的逐点比较

≤′ ⊆ ≤_Q 且严格部分无环；F ≤′ G 在序列层面比较：
对基集上每个长度 R* 的递增序列 X 比较 F(X) 与 G(X)
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Iterator, List, Optional

import numpy as np

from ..errors import IncompatibleBases, IncompleteFragment, SemanticError
from ..orders.poset import Poset, find_violation
from ..ordinals.omega import suffix_ranking
from .fragment_array import ArrayFragment

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RankingRelation:
    """有限目标上的 ≤′（自反，含于 ≤_Q）"""
    target: Poset
    le: np.ndarray

    def __post_init__(self):
        le = np.array(self.le, dtype=bool)
        np.fill_diagonal(le, True)
        if le.shape != self.target.le.shape:
            raise SemanticError("≤′ 的形状与目标序不一致")
        outside = np.argwhere(le & ~self.target.le)
        if len(outside):
            a, b = (int(x) for x in outside[0])
            raise SemanticError(f"≤′ 不含于 ≤_Q: {a} ≤′ {b}", witness=(a, b))
        violation = find_violation(le)
        if violation is not None:
            raise SemanticError(f"≤′ 不是偏序: {violation}", witness=violation.witness)
        le.setflags(write=False)
        object.__setattr__(self, 'le', le)

    @property
    def is_finite(self) -> bool:
        return True

    def leq(self, a: int, b: int) -> bool:
        return bool(self.le[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.le[a, b])

    def below(self, value: int, strict: bool = False) -> List[int]:
        """≤′-低于 value 的元素，按 id 升序"""
        return [a for a in range(self.target.size) if self.le[a, value] and not (strict and a == value)]

    def carrier(self) -> List[int]:
        return list(range(self.target.size))

    def to_dict(self):
        label = self.target.label
        return {'pairs': [[label(int(a)), label(int(b))] for a, b in np.argwhere(self.le) if a != b]}


class SuffixRanking:
    """ω^α 上的后缀排名"""

    is_finite = False

    def leq(self, sigma, tau) -> bool:
        return suffix_ranking(sigma, tau)

    def lt(self, sigma, tau) -> bool:
        return suffix_ranking(sigma, tau) and tuple(sigma) != tuple(tau)

    def below(self, value, strict: bool = False) -> List[tuple]:
        """value 的后缀，短的在前"""
        value = tuple(value)
        start = 1 if strict else 0
        return [value[k:] for k in range(len(value), start - 1, -1)]

    def carrier(self) -> Optional[List]:
        return None

    def to_dict(self):
        return {'kind': 'suffix'}


def target_ranking(target: Poset) -> RankingRelation:
    """≤′ = ≤_Q"""
    return RankingRelation(target, target.le)


def discrete_ranking(target: Poset) -> RankingRelation:
    """≤′ 只有自反部分"""
    return RankingRelation(target, np.eye(target.size, dtype=bool))


def iter_rankings(target: Poset) -> Iterator[RankingRelation]:
    """严格序的全部传递子关系（加上自反部分）"""
    strict = target.strict_pairs()
    n = target.size
    for k in range(len(strict) + 1):
        for chosen in combinations(strict, k):
            le = np.eye(n, dtype=bool)
            for a, b in chosen:
                le[a, b] = True
            if find_violation(le) is None:
                yield RankingRelation(target, le)


class PointwiseComparison(Enum):
    LEQ = 'leq'
    LT = 'lt'
    NEITHER = 'neither'


def compare_pointwise(f: ArrayFragment, g: ArrayFragment, ranking: Any) -> PointwiseComparison:
    """
    F ≤′ G / F <′ G

    R* 取两者 rank 的较大者，X 取遍 base(F) 上长度 R* 的递增序列；
    没有可比较的 X 时按空真返回 LT 并记 warning

    Raises:
        IncompatibleBases: base(F) 不含于 base(G)
        IncompleteFragment: 某个 X 在一侧没有成员前缀
    """
    if not set(f.domain.base) <= set(g.domain.base):
        raise IncompatibleBases("base(F) 不含于 base(G)",
                                witness=sorted(set(f.domain.base) - set(g.domain.base)))
    rank = max(f.domain.rank, g.domain.rank)
    strict = True
    compared = 0
    for x in combinations(f.domain.base, rank):
        a, b = f.at(x), g.at(x)
        if a is None or b is None:
            raise IncompleteFragment(f"{x} 在{'F' if a is None else 'G'}中没有成员前缀", witness=list(x))
        compared += 1
        if not ranking.leq(a, b):
            return PointwiseComparison.NEITHER
        strict = strict and ranking.lt(a, b)
    if not compared:
        log.warning("compare_pointwise: 没有可比较的序列，按空真处理")
    return PointwiseComparison.LT if strict else PointwiseComparison.LEQ

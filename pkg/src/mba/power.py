"""
[Q]^{<=n}：Q 的大小不超过 n 的非空子集，a ≺ b 当且仅当 a 中每个 p 都有 b 中的 q 使 p <_Q q

子集用位掩码表示，载体按排序后的 id 元组字典序排列
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import BudgetExceeded
from ..orders.poset import Poset

log = logging.getLogger(__name__)

DEFAULT_MAX_CARRIER = 4096

Subset = Tuple[int, ...]


def to_mask(subset: Sequence[int]) -> int:
    mask = 0
    for p in subset:
        mask |= 1 << int(p)
    return mask


def from_mask(mask: int) -> Subset:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def up_masks(ground: Poset) -> List[int]:
    """up[p]：严格大于 p 的元素集合"""
    return [to_mask(np.nonzero(ground.strict[p])[0]) for p in range(ground.size)]


def majorized(a_mask: int, b_mask: int, up: Sequence[int]) -> bool:
    """a ≺ b"""
    p, rest = 0, a_mask
    while rest:
        if rest & 1 and not up[p] & b_mask:
            return False
        rest >>= 1
        p += 1
    return True


@dataclass(frozen=True, eq=False)
class FinSubsetOrder:
    ground: Poset
    n: int
    carrier: Tuple[Subset, ...]
    prec: np.ndarray

    @property
    def size(self) -> int:
        return len(self.carrier)

    @cached_property
    def index(self) -> Dict[Subset, int]:
        return {s: i for i, s in enumerate(self.carrier)}

    def precedes(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return bool(self.prec[self.index[tuple(sorted(a))], self.index[tuple(sorted(b))]])

    def labels_of(self, subset: Subset) -> List[str]:
        return [self.ground.label(p) for p in subset]

    def to_dict(self) -> Dict:
        return {
            'ground': self.ground.to_dict(),
            'n': self.n,
            'carrier': [self.labels_of(s) for s in self.carrier],
            'prec': [[self.labels_of(self.carrier[a]), self.labels_of(self.carrier[b])]
                     for a, b in zip(*np.nonzero(self.prec))],
        }


def carrier_size(ground_size: int, n: int) -> int:
    return sum(comb(ground_size, k) for k in range(1, min(n, ground_size) + 1))


def build_fin_subset_order(ground: Poset, n: int, max_carrier: int = DEFAULT_MAX_CARRIER) -> FinSubsetOrder:
    """
    物化 [Q]^{<=n} 及其上的 ≺

    Raises:
        BudgetExceeded: 子集个数超过 max_carrier
    """
    if n < 1:
        raise ValueError(f"n 必须 >= 1: {n}")
    size = carrier_size(ground.size, n)
    if size > max_carrier:
        raise BudgetExceeded(f"[Q]^{{<={n}}} 有 {size} 个子集，超出上限 {max_carrier}",
                             witness={'carrier': size, 'max_carrier': max_carrier})
    carrier = sorted(
        (subset for k in range(1, min(n, ground.size) + 1) for subset in combinations(range(ground.size), k)),
    )
    masks = np.array([to_mask(s) for s in carrier], dtype=object)
    up = up_masks(ground)
    # has_up[p, j]：carrier[j] 中有严格大于 p 的元素
    has_up = np.array([[bool(up[p] & int(m)) for m in masks] for p in range(ground.size)], dtype=bool)
    prec = np.ones((len(carrier), len(carrier)), dtype=bool)
    for i, subset in enumerate(carrier):
        for p in subset:
            prec[i] &= has_up[p]
    prec.setflags(write=False)
    log.debug("build_fin_subset_order: |Q|=%d n=%d, %d 个子集", ground.size, n, len(carrier))
    return FinSubsetOrder(ground, n, tuple(carrier), prec)


@dataclass(frozen=True)
class WellFoundedReport:
    ok: bool
    cycle: Optional[List[Subset]] = None

    def to_dict(self) -> Dict:
        return {'ok': self.ok, 'cycle': [list(s) for s in self.cycle] if self.cycle else None}


def check_wellfounded(order: FinSubsetOrder) -> WellFoundedReport:
    """有限情形下良基即 ≺ 无环；有环时返回一个环"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(order.size))
    graph.add_edges_from((int(a), int(b)) for a, b in zip(*np.nonzero(order.prec)))
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return WellFoundedReport(True)
    cycle = [order.carrier[a] for a, _ in edges]
    log.warning("check_wellfounded: ≺ 有环 %s", cycle)
    return WellFoundedReport(False, cycle)


@dataclass(frozen=True)
class StrictOrderReport:
    irreflexive: bool
    transitive: bool
    witness: Optional[List[Subset]] = None

    @property
    def ok(self) -> bool:
        return self.irreflexive and self.transitive

    def to_dict(self) -> Dict:
        return {
            'irreflexive': self.irreflexive,
            'transitive': self.transitive,
            'witness': [list(s) for s in self.witness] if self.witness else None,
        }


def check_strict_partial_order(order: FinSubsetOrder) -> StrictOrderReport:
    """
    ≺ 的反自反性与传递性

    Returns:
        StrictOrderReport；witness 为 [a]（a ≺ a）或 [a, b, c]（a ≺ b ≺ c 但 a ⊀ c）
    """
    reflexive = np.nonzero(np.diag(order.prec))[0]
    if len(reflexive):
        return StrictOrderReport(False, True, [order.carrier[int(reflexive[0])]])
    prec = order.prec.astype(np.int64)
    broken = (prec @ prec > 0) & ~order.prec
    if broken.any():
        a, c = (int(v) for v in np.argwhere(broken)[0])
        b = int(np.nonzero(order.prec[a] & order.prec[:, c])[0][0])
        return StrictOrderReport(True, False, [order.carrier[a], order.carrier[b], order.carrier[c]])
    return StrictOrderReport(True, True)

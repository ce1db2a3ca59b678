"""
序映射的穷举搜索
按目标 id 的字典序回溯，返回字典序最小的见证
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import SearchBudgetExceeded
from ..utils.parallel import least_witness
from .poset import Preorder

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000

EMBEDDING = 'embedding'
REFLECTING = 'reflecting'


def is_order_reflecting(source: Preorder, target: Preorder, mapping: Sequence[int]) -> bool:
    """f(p) <= f(q) 蕴含 p <= q"""
    n = source.size
    return all(
        source.leq(p, q) or not target.leq(mapping[p], mapping[q])
        for p in range(n) for q in range(n)
    )


def is_embedding(source: Preorder, target: Preorder, mapping: Sequence[int]) -> bool:
    """p <= q 当且仅当 f(p) <= f(q)"""
    n = source.size
    return all(
        source.leq(p, q) == target.leq(mapping[p], mapping[q])
        for p in range(n) for q in range(n)
    )


@dataclass(frozen=True)
class OrderMap:
    """source 到 target 的全映射"""
    source: Preorder
    target: Preorder
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'mapping', tuple(int(v) for v in self.mapping))
        if len(self.mapping) != self.source.size:
            raise ValueError("映射必须在 source 上处处有定义")

    def __call__(self, p: int) -> int:
        return self.mapping[p]

    @property
    def is_order_reflecting(self) -> bool:
        return is_order_reflecting(self.source, self.target, self.mapping)

    @property
    def is_embedding(self) -> bool:
        return is_embedding(self.source, self.target, self.mapping)

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def to_dict(self) -> Dict:
        return {
            'map': {self.source.label(p): self.target.label(v) for p, v in enumerate(self.mapping)},
            'embedding': self.is_embedding,
            'order_reflecting': self.is_order_reflecting,
        }


def _consistent(mode: str, source: Preorder, target: Preorder, assigned: List[int], p: int, v: int) -> bool:
    """新赋值 p -> v 与已赋值部分（以及 p 自身）是否相容"""
    for q in range(p + 1):
        w = v if q == p else assigned[q]
        forward = target.leq(v, w), target.leq(w, v)
        backward = source.leq(p, q), source.leq(q, p)
        if mode == EMBEDDING:
            if forward != backward:
                return False
        else:
            if (forward[0] and not backward[0]) or (forward[1] and not backward[1]):
                return False
    return True


def _search(mode: str, source: Preorder, target: Preorder, budget: int,
            prefix: Tuple[int, ...] = ()) -> Optional[Tuple[int, ...]]:
    """从给定前缀开始回溯，返回字典序最小的映射"""
    n, m = source.size, target.size
    assigned: List[int] = list(prefix)
    for p, v in enumerate(prefix):
        if not _consistent(mode, source, target, assigned, p, v):
            return None
    visited = 0

    def extend(p: int) -> bool:
        nonlocal visited
        if p == n:
            return True
        for v in range(m):
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(f"映射搜索超出预算 {budget}", witness={'visited': visited})
            if _consistent(mode, source, target, assigned, p, v):
                assigned.append(v)
                if extend(p + 1):
                    return True
                assigned.pop()
        return False

    return tuple(assigned) if extend(len(prefix)) else None


def _guard(source: Preorder, target: Preorder, budget: int) -> None:
    candidates = target.size ** source.size
    if candidates > budget:
        raise SearchBudgetExceeded(
            f"候选映射数 {target.size}^{source.size} 超出预算 {budget}",
            witness={'candidates': candidates, 'budget': budget},
        )


def _find(mode: str, source: Preorder, target: Preorder, budget: int,
          workers: int) -> Optional[OrderMap]:
    _guard(source, target, budget)
    if source.size == 0:
        return OrderMap(source, target, ())
    if workers > 1 and target.size > 1:
        # 按第一个元素的像拆分，结果按分支顺序合并，保持最小见证
        task = partial(_search, mode, source, target, budget)
        found = least_witness(task, [(v,) for v in range(target.size)], workers)
    else:
        found = _search(mode, source, target, budget)
    log.debug("%s 搜索 |P|=%d |Q|=%d: %s", mode, source.size, target.size, found)
    return OrderMap(source, target, found) if found is not None else None


def find_embedding(source: Preorder, target: Preorder, budget: int = DEFAULT_BUDGET,
                   workers: int = 1) -> Optional[OrderMap]:
    """
    查找嵌入 p <= p' ⇔ f(p) <= f(p')

    Args:
        source: P
        target: Q
        budget: 候选映射数上限 |Q|^|P|，也作为回溯节点上限
        workers: >1 时按第一个元素的像分给多个进程

    Returns:
        字典序最小的嵌入，不存在时为 None

    Raises:
        SearchBudgetExceeded
    """
    return _find(EMBEDDING, source, target, budget, workers)


def find_order_reflecting(source: Preorder, target: Preorder, budget: int = DEFAULT_BUDGET,
                          workers: int = 1) -> Optional[OrderMap]:
    """
    查找保序反射映射 f(p) <= f(q) ⇒ p <= q

    参数与返回值同 find_embedding
    """
    return _find(REFLECTING, source, target, budget, workers)

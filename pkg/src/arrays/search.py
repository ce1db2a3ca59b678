"""
坏片段搜索

变量为片段成员（按字典序），值为目标元素 id（升序），
每个 s ⊲ t 给出约束 f(s) 不 <= f(t)。先做 AC-3，再带前向检查回溯，
第一个解即值字典序最小的解
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..barriers.fragment import Fragment, uniform_fragment
from ..errors import SearchBudgetExceeded
from ..orders.poset import Poset
from ..utils.parallel import least_witness
from .fragment_array import ArrayFragment, Target, target_poset

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000

Assignment = Tuple[int, ...]


@dataclass(frozen=True)
class NotBelow:
    """二元约束 a 不 <= b（可 pickle，供多进程使用）"""
    poset: Poset

    def __call__(self, a: int, b: int) -> bool:
        return not self.poset.leq(a, b)


class ConstraintSearch:
    """
    二元约束满足问题

    constraints[(i, j)] 是谓词 allowed(v_i, v_j)；两个方向都要登记
    """

    def __init__(self, domains: Sequence[Sequence[int]],
                 constraints: Dict[Tuple[int, int], Callable[[int, int], bool]],
                 budget: int = DEFAULT_BUDGET):
        self.domains = [list(d) for d in domains]
        self.constraints = constraints
        self.budget = budget
        self.nodes = 0
        self.neighbors: Dict[int, List[int]] = {i: [] for i in range(len(domains))}
        for i, j in constraints:
            self.neighbors[i].append(j)

    def allowed(self, i: int, vi: int, j: int, vj: int) -> bool:
        return self.constraints[(i, j)](vi, vj)

    def _revise(self, domains: List[List[int]], i: int, j: int) -> bool:
        kept = [x for x in domains[i] if any(self.allowed(i, x, j, y) for y in domains[j])]
        revised = len(kept) != len(domains[i])
        domains[i] = kept
        return revised

    def ac3(self, domains: List[List[int]]) -> bool:
        """弧相容；某个域被删空时返回 False"""
        queue: Set[Tuple[int, int]] = set(self.constraints)
        while queue:
            i, j = min(queue)
            queue.discard((i, j))
            if self._revise(domains, i, j):
                if not domains[i]:
                    return False
                queue.update((k, i) for k in self.neighbors[i] if k != j)
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"回溯节点数超出预算 {self.budget}", witness={'nodes': self.nodes})

    def _forward_check(self, domains: List[List[int]], var: int, value: int) -> Optional[List[List[int]]]:
        pruned = [list(d) for d in domains]
        pruned[var] = [value]
        for other in self.neighbors[var]:
            if other > var:
                pruned[other] = [y for y in pruned[other] if self.allowed(var, value, other, y)]
                if not pruned[other]:
                    return None
        return pruned

    def solutions(self, prefix: Assignment = ()) -> Iterator[Assignment]:
        """按值字典序生成全部解"""
        domains = [list(d) for d in self.domains]
        if not self.ac3(domains):
            return
        for var, value in enumerate(prefix):
            if value not in domains[var]:
                return
            domains = self._forward_check(domains, var, value)
            if domains is None:
                return
        yield from self._backtrack(domains, len(prefix), list(prefix))

    def _backtrack(self, domains: List[List[int]], var: int, assigned: List[int]) -> Iterator[Assignment]:
        if var == len(domains):
            yield tuple(assigned)
            return
        for value in domains[var]:
            self._tick()
            pruned = self._forward_check(domains, var, value)
            if pruned is None:
                continue
            assigned.append(value)
            yield from self._backtrack(pruned, var + 1, assigned)
            assigned.pop()

    def solve(self, prefix: Assignment = ()) -> Optional[Assignment]:
        return next(self.solutions(prefix), None)


def _bad_constraints(fragment: Fragment, poset: Poset) -> Dict[Tuple[int, int], Callable[[int, int], bool]]:
    position = fragment.position
    relation = NotBelow(poset)
    constraints = {}
    for s, t in fragment.triangle_pairs:
        i, j = position[s], position[t]
        constraints[(i, j)] = relation
        constraints[(j, i)] = Reversed(relation)
    return constraints


@dataclass(frozen=True)
class Reversed:
    """约束的反方向"""
    inner: Callable[[int, int], bool]

    def __call__(self, a: int, b: int) -> bool:
        return self.inner(b, a)


def bad_fragment_search(fragment: Fragment, target: Target, budget: int = DEFAULT_BUDGET,
                        domains: Optional[Sequence[Sequence[int]]] = None) -> ConstraintSearch:
    """构造“f 是坏的”这个约束问题，domains 缺省为目标的全部元素"""
    poset = target_poset(target)
    if domains is None:
        domains = [range(poset.size)] * len(fragment.members)
    return ConstraintSearch(domains, _bad_constraints(fragment, poset), budget)


def _solve_branch(search: ConstraintSearch, prefix: Assignment) -> Optional[Assignment]:
    return search.solve(prefix)


def search_bad_fragment(fragment: Fragment, target: Target, budget: int = DEFAULT_BUDGET,
                        workers: int = 1) -> Optional[ArrayFragment]:
    """
    值字典序最小的非平凡坏数组

    Args:
        fragment: 定义域
        target: Poset 或 SumOrder
        budget: 回溯节点上限
        workers: >1 时按第一个成员的取值分给多个进程

    Returns:
        ArrayFragment；片段内没有 ⊲ 对或不存在坏数组时为 None

    Raises:
        SearchBudgetExceeded
    """
    if not fragment.triangle_pairs:
        log.debug("search_bad_fragment: 片段内没有 ⊲ 对")
        return None
    search = bad_fragment_search(fragment, target, budget)
    if workers > 1:
        found = least_witness(partial(_solve_branch, search), [(v,) for v in search.domains[0]], workers)
    else:
        found = search.solve()
    log.debug("search_bad_fragment: %d 个成员, %d 个节点, 结果 %s",
              len(fragment.members), search.nodes, found)
    return ArrayFragment(fragment, found, target) if found is not None else None


def iter_bad_fragments(fragment: Fragment, target: Target, budget: int = DEFAULT_BUDGET) -> Iterator[ArrayFragment]:
    """按值字典序列出全部坏数组（片段须有 ⊲ 对）"""
    if not fragment.triangle_pairs:
        return
    for values in bad_fragment_search(fragment, target, budget).solutions():
        yield ArrayFragment(fragment, values, target)


def max_bad_horizon(k: int, target: Target, n_max: int, budget: int = DEFAULT_BUDGET,
                    workers: int = 1) -> int:
    """
    最大的 N <= n_max 使 [0,N)^k 上存在非平凡坏数组，没有时为 0

    N 从 k+1 起递增，一旦不存在即停止（坏数组限制到更小的 N 仍是坏的）
    """
    if k < 1:
        raise ValueError(f"k 必须 >= 1: {k}")
    best = 0
    for n in range(k + 1, n_max + 1):
        found = search_bad_fragment(uniform_fragment(range(n), k), target, budget, workers)
        log.info("max_bad_horizon: k=%d N=%d -> %s", k, n, 'bad' if found else 'none')
        if found is None:
            break
        best = n
    return best

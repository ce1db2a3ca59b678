"""
≤′-极小坏数组搜索

从坏的 F0 出发反复下降：在同一定义域上找坏数组 F′，使每个被某个 X 取到的成员
的值都严格 ≤′-低于当前值（其余成员的值不受 compare_pointwise 约束，可任取），
直到找不到为止。≤′ 良基，下降必然终止
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from ..errors import NotBad, SemanticError
from .fragment_array import ArrayFragment, Verdict, classify_fragment, target_poset
from .search import DEFAULT_BUDGET, ConstraintSearch, Reversed

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimalBadResult:
    array: ArrayFragment
    steps: int
    degenerate: bool = False

    def to_dict(self) -> Dict:
        return {'array': self.array.to_dict(), 'steps': self.steps, 'degenerate': self.degenerate}


@dataclass(frozen=True)
class _DecodedNotBelow:
    order: Any
    table: tuple

    def __call__(self, a: int, b: int) -> bool:
        return not self.order.leq(self.table[a], self.table[b])


def _candidates(f: ArrayFragment, ranking: Any, reached: set) -> List[List[Any]]:
    carrier = ranking.carrier()
    result = []
    for member in f.domain.members:
        if member in reached:
            result.append(ranking.below(f(member), strict=True))
        elif carrier is not None:
            result.append(carrier)
        else:
            result.append(ranking.below(f(member)))
    return result


def _descend(f: ArrayFragment, ranking: Any, reached: set, budget: int) -> tuple:
    """一步严格下降；返回 (新值或 None, 使用的节点数)"""
    candidates = _candidates(f, ranking, reached)
    if any(not c for c in candidates):
        return None, 0
    table: List[Any] = []
    index: Dict[Any, int] = {}
    domains: List[List[int]] = []
    for options in candidates:
        domain = []
        for value in options:
            if value not in index:
                index[value] = len(table)
                table.append(value)
            domain.append(index[value])
        domains.append(domain)
    relation = _DecodedNotBelow(f.target, tuple(table))
    position = f.domain.position
    constraints = {}
    for s, t in f.domain.triangle_pairs:
        i, j = position[s], position[t]
        constraints[(i, j)] = relation
        constraints[(j, i)] = Reversed(relation)
    search = ConstraintSearch(domains, constraints, budget)
    found = search.solve()
    return (None if found is None else tuple(table[k] for k in found)), search.nodes


def minimal_bad_search(f0: ArrayFragment, ranking: Any, budget: int = DEFAULT_BUDGET) -> MinimalBadResult:
    """
    ≤′-极小坏数组

    Args:
        f0: 坏数组
        ranking: RankingRelation（目标为 f0 的有限目标）或 SuffixRanking（ω^α 目标）
        budget: 全部下降步骤的回溯节点总上限

    Returns:
        MinimalBadResult；F0 平凡坏时原样返回并标记 degenerate

    Raises:
        NotBad, SearchBudgetExceeded
    """
    classification = classify_fragment(f0)
    if not classification.is_bad:
        raise NotBad("F0 是好的", witness=[list(m) for m in classification.witness])
    if classification.verdict is Verdict.VACUOUSLY_BAD:
        log.warning("minimal_bad_search: F0 没有 ⊲ 对，原样返回")
        return MinimalBadResult(f0, 0, degenerate=True)
    if ranking.is_finite and ranking.target != target_poset(f0.target):
        raise SemanticError("排名的载体与数组目标不一致")

    reached = set(f0.domain.reached_members())
    current, steps, spent = f0, 0, 0
    while True:
        values, nodes = _descend(current, ranking, reached, budget - spent)
        spent += nodes
        if values is None:
            break
        current = current.with_values(values)
        steps += 1
        log.debug("minimal_bad_search: 第 %d 步 -> %s", steps, values)
    return MinimalBadResult(current, steps)


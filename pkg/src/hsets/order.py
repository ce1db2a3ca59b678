"""
≤_{H(Q)}：四条递归子句，按 (id(x), id(y)) 记忆化，每个 Q 一张表
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..orders.poset import Preorder, antichain, one_plus_two
from .terms import DEFAULT_MAX_INDEX, HTerm, ddot, dot, mk_set

log = logging.getLogger(__name__)

_MEMO: Dict[Tuple, Dict[Tuple[int, int], bool]] = {}
_MEMO_LOCK = threading.Lock()


def _memo_for(ground: Preorder) -> Dict[Tuple[int, int], bool]:
    memo = _MEMO.get(ground.key)
    if memo is None:
        with _MEMO_LOCK:
            memo = _MEMO.setdefault(ground.key, {})
    return memo


def h_leq(x: HTerm, y: HTerm, ground: Preorder) -> bool:
    """
    x ≤_{H(Q)} y

    叶/叶按 ≤_Q；叶/集合：存在子项；集合/叶：全部子项；
    集合/集合：每个 x 的子项都有 y 的子项在其上

    Raises:
        UnknownLabel: 叶子标签不在 Q 中
    """
    memo = _memo_for(ground)

    def leq(a: HTerm, b: HTerm) -> bool:
        key = (a.id, b.id)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if a.is_leaf and b.is_leaf:
            result = ground.leq(ground.index_of(a.label), ground.index_of(b.label))
        elif a.is_leaf:
            result = any(leq(a, c) for c in b.children)
        elif b.is_leaf:
            result = all(leq(c, b) for c in a.children)
        else:
            result = all(any(leq(c, d) for d in b.children) for c in a.children)
        memo[key] = result
        return result

    return leq(x, y)


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


@dataclass
class InterlockedReport:
    """ṁ、n̈ 等价关系的检查结果，violations 为空表示全部成立"""
    bound: int
    ground: List[str]
    checked: int = 0
    violations: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            'bound': self.bound,
            'ground': self.ground,
            'checked': self.checked,
            'ok': self.ok,
            'violations': self.violations,
        }


def verify_interlocked(bound: int, ground: Optional[Preorder] = None,
                       max_index: int = DEFAULT_MAX_INDEX) -> InterlockedReport:
    """
    对 0 <= m, n <= bound 检查

        ṁ ≤ ṅ ⇔ m ≤ n,  m̈ ≤ n̈ ⇔ m ≤ n,  ṁ ≤ n̈ ⇔ (m ≤ n 且 0 ≤ 1),  m̈ ≤ ṅ ⇔ (m ≤ n 且 1 ≤ 0)

    ground 缺省为 1⊕2（0 < 1），此时 m̈ ≰ ṅ 恒成立；ground 取 3̄ 时 ṁ 与 n̈ 总不可比较

    Raises:
        BoundExceeded
    """
    ground = ground or one_plus_two()
    zero, one = ground.index_of('0'), ground.index_of('1')
    up, down = ground.leq(zero, one), ground.leq(one, zero)
    dots = [dot(n, max_index) for n in range(bound + 1)]
    ddots = [ddot(n, max_index) for n in range(bound + 1)]
    report = InterlockedReport(bound, list(ground.labels))
    cases = (
        ('dot<=dot', dots, dots, True),
        ('ddot<=ddot', ddots, ddots, True),
        ('dot<=ddot', dots, ddots, up),
        ('ddot<=dot', ddots, dots, down),
    )
    for m in range(bound + 1):
        for n in range(bound + 1):
            for name, left, right, factor in cases:
                expected = m <= n and factor
                actual = h_leq(left[m], right[n], ground)
                report.checked += 1
                if actual != expected:
                    report.violations.append({'relation': name, 'm': m, 'n': n,
                                              'expected': expected, 'actual': actual})
    log.info("verify_interlocked: bound=%d, %d 项检查, %d 项违反", bound, report.checked, len(report.violations))
    return report


@dataclass
class Antichain3Report:
    terms: List[HTerm]
    comparisons: List[Tuple[int, int, bool]]

    @property
    def verdict(self) -> str:
        return 'antichain' if not any(r for _, _, r in self.comparisons) else 'not_antichain'

    def to_dict(self) -> Dict:
        return {
            'terms': [str(t) if len(str(t)) < 4096 else f"#{t.id}" for t in self.terms],
            'comparisons': [{'left': i, 'right': j, 'leq': r} for i, j, r in self.comparisons],
            'verdict': self.verdict,
        }


def antichain3_check() -> Antichain3Report:
    """{m̈0, ṁ5}、{m̈1, ṁ4}、{m̈2, ṁ3} 在 H_f(1⊕2) 中两两不可比较"""
    ground = one_plus_two()
    terms = [mk_set([ddot(k), dot(5 - k)]) for k in range(3)]
    comparisons = [(i, j, h_leq(terms[i], terms[j], ground))
                   for i in range(3) for j in range(3) if i != j]
    return Antichain3Report(terms, comparisons)


def antichain_ground() -> Preorder:
    """3̄，标签与 1⊕2 相同"""
    return antichain(3, ('0', '1', '*'))

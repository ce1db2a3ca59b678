"""
坏三元组：1⊕2 到 Q 的某个保序反射映射的像
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import BudgetExceeded, PostconditionViolation
from ..orders.maps import DEFAULT_BUDGET, is_order_reflecting
from ..orders.poset import Poset, one_plus_two
from .power import majorized, to_mask, up_masks

log = logging.getLogger(__name__)


class TriplePattern(Enum):
    ANTICHAIN_3 = 'Antichain3'
    ONE_PLUS_TWO = 'OnePlusTwoImage'


@dataclass(frozen=True)
class BadTriple:
    elements: Tuple[int, int, int]
    pattern: TriplePattern
    labels: Tuple[str, str, str]

    def to_dict(self) -> Dict:
        return {'elements': list(self.labels), 'pattern': self.pattern.value}


def _is_bad(ground: Poset, triple: Sequence[int]) -> bool:
    source = one_plus_two()
    return any(is_order_reflecting(source, ground, image) for image in permutations(triple))


def bad_triples(ground: Poset, budget: int = DEFAULT_BUDGET) -> List[BadTriple]:
    """
    全部坏三元组，按子集字典序

    Raises:
        BudgetExceeded: 需检查的映射数（6·C(|Q|,3)）超过 budget
    """
    candidates = 6 * comb(ground.size, 3)
    if candidates > budget:
        raise BudgetExceeded(f"需检查 {candidates} 个映射，超出预算 {budget}",
                             witness={'candidates': candidates, 'budget': budget})
    found = []
    for triple in combinations(range(ground.size), 3):
        if _is_bad(ground, triple):
            pattern = TriplePattern.ANTICHAIN_3 if ground.is_antichain(triple) else TriplePattern.ONE_PLUS_TWO
            found.append(BadTriple(triple, pattern, tuple(ground.label(p) for p in triple)))
    return found


def minimal_bad_triple(ground: Poset, budget: int = DEFAULT_BUDGET) -> Optional[BadTriple]:
    """
    ≺-极小的坏三元组，并列时取子集字典序最小者；没有坏三元组时为 None
    """
    triples = bad_triples(ground, budget)
    up = up_masks(ground)
    masks = [to_mask(t.elements) for t in triples]
    for b, b_mask in zip(triples, masks):
        if not any(majorized(a_mask, b_mask, up) for a_mask in masks):
            return b
    if triples:
        # ≺ 良基，非空时必有极小元
        raise PostconditionViolation("坏三元组在 ≺ 下没有极小元", witness=[list(t.labels) for t in triples])
    return None


@dataclass(frozen=True)
class DownSet:
    """Q₀ = {p | 存在 q ∈ b 使 p <_Q q}，elements 为 Q₀ 在 Q 中的 id"""
    poset: Poset
    elements: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {'elements': list(self.poset.labels), 'poset': self.poset.to_dict()}


def strict_down_set(ground: Poset, b: Sequence[int]) -> DownSet:
    """
    b 的严格下集及其诱导子序

    Q₀ 的每个坏三元组 a 都满足 a ≺ b（后置检查）

    Raises:
        PostconditionViolation: 某个坏三元组不在 b 之下
    """
    b = [ground.index_of(p) for p in b]
    below = np.zeros(ground.size, dtype=bool)
    for q in b:
        below |= ground.strict[:, q]
    elements = tuple(int(p) for p in np.nonzero(below)[0])
    down = DownSet(ground.induced(elements), elements)
    up, b_mask = up_masks(ground), to_mask(b)
    for triple in bad_triples(down.poset):
        original = [elements[p] for p in triple.elements]
        if not majorized(to_mask(original), b_mask, up):
            raise PostconditionViolation(f"{original} ⊀ {b}", witness=[ground.label(p) for p in original])
    return down

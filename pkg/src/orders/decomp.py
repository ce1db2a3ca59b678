"""
禁止子序刻画：反链的线性和

不可比关系的自反闭包是等价关系 ⇔ P 是反链的线性和 ⇔ 1⊕2 不嵌入 P；
再要求每个反链至多两个元素，即 1⊕2 与 3̄ 都不嵌入
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from ..errors import NotWidth2Decomposable
from .maps import OrderMap
from .poset import Poset, SumOrder, SumSpec, antichain, chain, one_plus_two, sum_over_index

log = logging.getLogger(__name__)


class WitnessKind(Enum):
    ONE_PLUS_TWO = 'OnePlusTwoEmbedding'
    ANTICHAIN_3 = 'Antichain3Embedding'


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: WitnessKind
    map: OrderMap

    def to_dict(self) -> Dict:
        return {'kind': self.kind.value, **self.map.to_dict()}


@dataclass(frozen=True)
class Decomposition:
    """
    P ≅ Σ_{p∈C} A(p)

    classes[k] 是第 k 层反链（按 id 升序），index[k] 为其最小 id，
    index 按 P 中的序从低到高排列
    """
    source: Poset
    classes: Tuple[Tuple[int, ...], ...]
    index: Tuple[int, ...]
    class_of: Tuple[int, ...]

    @property
    def width(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    def rank_of(self, element: int) -> int:
        return self.index.index(self.class_of[element])

    def to_sum_spec(self) -> SumSpec:
        index = chain(len(self.index), [self.source.label(r) for r in self.index])
        summands = tuple(antichain(len(c), [self.source.label(p) for p in c]) for c in self.classes)
        return SumSpec(index, summands)

    def reconstruct(self) -> Tuple[SumOrder, OrderMap]:
        """重新求和，并给出 P 到和序的同构"""
        total = sum_over_index(self.to_sum_spec())
        mapping = []
        for element in range(self.source.size):
            rank = self.rank_of(element)
            mapping.append(total.id_of(rank, self.classes[rank].index(element)))
        return total, OrderMap(self.source, total.poset, tuple(mapping))

    def to_dict(self) -> Dict:
        label = self.source.label
        return {
            'classes': [[label(p) for p in c] for c in self.classes],
            'index': [label(r) for r in self.index],
            'class_of': {label(p): label(r) for p, r in enumerate(self.class_of)},
        }


def incomparability_is_equivalence(poset: Poset) -> Optional[Tuple[int, int, int]]:
    """
    检查不可比关系的自反闭包是否传递

    Returns:
        None 表示是等价关系；否则返回字典序最小的三元组 (x, y, z)，
        x ∥ y、y ∥ z 且 x 与 z 可比较
    """
    n = poset.size
    for x in range(n):
        for y in range(n):
            if y == x or not poset.incomparable(x, y):
                continue
            for z in range(n):
                if z != x and z != y and poset.incomparable(y, z) and poset.comparable(x, z):
                    return x, y, z
    return None


def _classes(poset: Poset) -> List[Tuple[int, ...]]:
    """不可比等价类，按所在层从低到高排序"""
    seen: Dict[int, Tuple[int, ...]] = {}
    for p in range(poset.size):
        rep = next(q for q in range(poset.size) if q == p or poset.incomparable(p, q))
        seen.setdefault(rep, tuple(q for q in range(poset.size) if q == rep or poset.incomparable(rep, q)))
    # 线性和中，一层之下的元素个数随层严格递增
    return sorted(seen.values(), key=lambda c: int(poset.strict[:, c[0]].sum()))


def decompose(poset: Poset) -> Union[Decomposition, ForbiddenWitness]:
    """
    分解为反链的线性和，或给出 1⊕2 的嵌入

    Returns:
        Decomposition；不可比关系不传递时返回 ForbiddenWitness(ONE_PLUS_TWO)，
        其中 ★ 映到 y，0 与 1 映到 x、z 中较低和较高者
    """
    triple = incomparability_is_equivalence(poset)
    if triple is not None:
        x, y, z = triple
        low, high = (x, z) if poset.lt(x, z) else (z, x)
        source = one_plus_two()
        mapping = OrderMap(source, poset, (low, high, y))
        log.debug("decompose: 三元组 %s，不是反链的线性和", triple)
        return ForbiddenWitness(WitnessKind.ONE_PLUS_TWO, mapping)

    classes = _classes(poset)
    class_of = [0] * poset.size
    for c in classes:
        for p in c:
            class_of[p] = c[0]
    return Decomposition(poset, tuple(classes), tuple(c[0] for c in classes), tuple(class_of))


class Width2Kind(Enum):
    LINEAR_SUM_OF_PAIRS = 'LinearSumOfPairs'
    FORBIDDEN = 'Forbidden'


@dataclass(frozen=True)
class Width2Classification:
    kind: Width2Kind
    decomposition: Optional[Decomposition] = None
    witness: Optional[ForbiddenWitness] = None

    @property
    def is_linear_sum_of_pairs(self) -> bool:
        return self.kind is Width2Kind.LINEAR_SUM_OF_PAIRS

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind.value,
            'decomposition': self.decomposition.to_dict() if self.decomposition else None,
            'witness': self.witness.to_dict() if self.witness else None,
        }


def classify_width2(poset: Poset) -> Width2Classification:
    """
    是否为至多两元反链的线性和

    Returns:
        LinearSumOfPairs(分解) 或 Forbidden(1⊕2 嵌入 / 3̄ 嵌入)
    """
    result = decompose(poset)
    if isinstance(result, ForbiddenWitness):
        return Width2Classification(Width2Kind.FORBIDDEN, witness=result)
    for c in result.classes:
        if len(c) >= 3:
            mapping = OrderMap(antichain(3), poset, c[:3])
            witness = ForbiddenWitness(WitnessKind.ANTICHAIN_3, mapping)
            return Width2Classification(Width2Kind.FORBIDDEN, decomposition=result, witness=witness)
    return Width2Classification(Width2Kind.LINEAR_SUM_OF_PAIRS, decomposition=result)


def embed_into_two_times_gamma(poset: Poset) -> OrderMap:
    """
    嵌入 2̄·γ（γ = 层数）

    层代表元 p 映到 (rank, 0)，同层另一元素映到 (rank, 1)

    Raises:
        NotWidth2Decomposable
    """
    from ..ordinals.layers import two_bar_times_gamma

    classification = classify_width2(poset)
    if not classification.is_linear_sum_of_pairs:
        raise NotWidth2Decomposable(
            "不是至多两元反链的线性和",
            witness=classification.witness.to_dict(),
        )
    decomposition = classification.decomposition
    layers = two_bar_times_gamma(len(decomposition.index))
    target = layers.materialize()
    mapping = []
    for p in range(poset.size):
        j = 0 if decomposition.class_of[p] == p else 1
        mapping.append(layers.id_of(decomposition.rank_of(p), j))
    return OrderMap(poset, target, tuple(mapping))

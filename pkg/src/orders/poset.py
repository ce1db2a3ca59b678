"""
有限偏序与拟序
关系以稠密布尔矩阵存储，le[i, j] 表示 i <= j
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..errors import (
    AntisymmetryViolation,
    MissingElement,
    PosetViolation,
    ReflexivityViolation,
    TransitivityViolation,
    UnknownLabel,
)

log = logging.getLogger(__name__)

STAR = '*'

Label = Union[int, str]


@dataclass(frozen=True, eq=False)
class Preorder:
    """
    有限拟序（自反、传递）

    元素 id 为 0..n-1，labels 为显示名；构造时只检查形状，
    公理检查见 check_poset / validate_poset
    """
    le: np.ndarray
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        le = np.array(self.le, dtype=bool)
        if le.ndim != 2 or le.shape[0] != le.shape[1]:
            raise ValueError(f"关系矩阵必须是方阵，实际形状 {le.shape}")
        le.setflags(write=False)
        object.__setattr__(self, 'le', le)
        labels = tuple(str(x) for x in self.labels) or tuple(str(i) for i in range(le.shape[0]))
        if len(labels) != le.shape[0]:
            raise ValueError("labels 数量与元素数量不一致")
        if len(set(labels)) != len(labels):
            raise ValueError(f"labels 重复: {labels}")
        object.__setattr__(self, 'labels', labels)

    @property
    def size(self) -> int:
        return self.le.shape[0]

    def __len__(self) -> int:
        return self.size

    @cached_property
    def key(self) -> Tuple:
        """结构指纹，用作缓存键"""
        return (type(self).__name__, self.labels, self.le.tobytes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.le, other.le)

    def __hash__(self) -> int:
        return hash(self.key)

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: Label) -> int:
        """label 或 id 转成 id"""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.size:
                return int(label)
            raise UnknownLabel(f"元素 id 越界: {label}", witness=int(label))
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise UnknownLabel(f"未知的元素标签: {label}", witness=str(label)) from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.le[a, b])

    def lt(self, a: int, b: int) -> bool:
        return bool(self.le[a, b]) and not bool(self.le[b, a])

    def comparable(self, a: int, b: int) -> bool:
        return bool(self.le[a, b] or self.le[b, a])

    def incomparable(self, a: int, b: int) -> bool:
        return not self.comparable(a, b)

    @cached_property
    def strict(self) -> np.ndarray:
        """严格部分 <"""
        strict = self.le & ~self.le.T
        strict.setflags(write=False)
        return strict

    def strict_pairs(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.strict))]

    def is_antichain(self, ids: Iterable[int]) -> bool:
        ids = list(ids)
        return all(self.incomparable(a, b) for k, a in enumerate(ids) for b in ids[k + 1:])

    def induced(self, ids: Sequence[int]) -> 'Preorder':
        """按给定 id 顺序取诱导子序，新 id 为其在 ids 中的位置"""
        ids = [int(i) for i in ids]
        return type(self)(self.le[np.ix_(ids, ids)], tuple(self.labels[i] for i in ids))

    def to_dict(self) -> Dict:
        return {
            'elements': list(self.labels),
            'pairs': [[self.labels[a], self.labels[b]] for a, b in self.strict_pairs()],
            'closure': True,
        }


class Poset(Preorder):
    """有限偏序：Preorder 再加反对称"""


def _relation_matrix(size: int, pairs: Iterable[Tuple[int, int]]) -> np.ndarray:
    le = np.zeros((size, size), dtype=bool)
    for a, b in pairs:
        le[a, b] = True
    return le


def _reflexive_transitive_closure(le: np.ndarray) -> np.ndarray:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(le.shape[0]))
    graph.add_edges_from(zip(*np.nonzero(le)))
    closure = nx.transitive_closure(graph, reflexive=True)
    closed = np.zeros_like(le)
    for a, b in closure.edges:
        closed[a, b] = True
    np.fill_diagonal(closed, True)
    return closed


def _resolve_elements(elements: Union[int, Sequence[Label]]) -> Tuple[str, ...]:
    if isinstance(elements, int):
        return tuple(str(i) for i in range(elements))
    return tuple(str(e) for e in elements)


def _resolve_pairs(labels: Tuple[str, ...], pairs: Iterable[Sequence[Label]]) -> List[Tuple[int, int]]:
    index = {label: i for i, label in enumerate(labels)}
    resolved = []
    for pair in pairs:
        ids = []
        for item in pair:
            if isinstance(item, (int, np.integer)) and not isinstance(item, bool) and 0 <= item < len(labels) \
                    and str(item) not in index:
                ids.append(int(item))
            elif str(item) in index:
                ids.append(index[str(item)])
            else:
                raise MissingElement(f"关系引用了未声明的元素: {item}", witness=item)
        resolved.append((ids[0], ids[1]))
    return resolved


def find_violation(le: np.ndarray, antisymmetric: bool = True) -> Optional[PosetViolation]:
    """依次检查反对称、自反、传递，返回字典序最小的反例"""
    n = le.shape[0]
    if antisymmetric:
        for a in range(n):
            for b in range(a + 1, n):
                if le[a, b] and le[b, a]:
                    return AntisymmetryViolation(f"反对称性不成立: {a} <= {b} 且 {b} <= {a}", witness=(a, b))
    for a in range(n):
        if not le[a, a]:
            return ReflexivityViolation(f"自反性不成立: {a}", witness=(a, a))
    for a in range(n):
        for b in np.nonzero(le[a])[0]:
            missing = np.nonzero(le[b] & ~le[a])[0]
            if len(missing):
                c = int(missing[0])
                return TransitivityViolation(f"传递性不成立: {a} <= {b} <= {c}", witness=(a, int(b), c))
    return None


def check_poset(
    elements: Union[int, Sequence[Label]],
    pairs: Iterable[Sequence[Label]],
    closure: bool = False,
) -> Optional[PosetViolation]:
    """
    检查原始关系，返回违反报告而不抛出

    Args:
        elements: 元素个数或标签列表
        pairs: 关系对 (a, b) 表示 a <= b，可用 id 或标签
        closure: 是否先做自反传递闭包

    Returns:
        违反报告（PosetViolation 实例），合法时为 None
    """
    labels = _resolve_elements(elements)
    le = _relation_matrix(len(labels), _resolve_pairs(labels, pairs))
    if closure:
        le = _reflexive_transitive_closure(le)
    return find_violation(le)


def validate_poset(
    elements: Union[int, Sequence[Label]],
    pairs: Iterable[Sequence[Label]],
    closure: bool = False,
) -> Poset:
    """
    由边表构造偏序

    默认不做闭包，输入不合法时报告违反的公理而不是悄悄修复

    Raises:
        MissingElement: 关系引用了未声明的元素
        AntisymmetryViolation / ReflexivityViolation / TransitivityViolation
    """
    labels = _resolve_elements(elements)
    le = _relation_matrix(len(labels), _resolve_pairs(labels, pairs))
    if closure:
        le = _reflexive_transitive_closure(le)
    violation = find_violation(le)
    if violation is not None:
        raise violation
    return Poset(le, labels)


def validate_preorder(
    elements: Union[int, Sequence[Label]],
    pairs: Iterable[Sequence[Label]],
    closure: bool = False,
) -> Preorder:
    """同 validate_poset，但不要求反对称"""
    labels = _resolve_elements(elements)
    le = _relation_matrix(len(labels), _resolve_pairs(labels, pairs))
    if closure:
        le = _reflexive_transitive_closure(le)
    violation = find_violation(le, antisymmetric=False)
    if violation is not None:
        raise violation
    return Preorder(le, labels)


def chain(n: int, labels: Optional[Sequence[str]] = None) -> Poset:
    """线序 n = {0 < 1 < ... < n-1}"""
    return Poset(np.triu(np.ones((n, n), dtype=bool)), tuple(labels or ()))


def antichain(n: int, labels: Optional[Sequence[str]] = None) -> Poset:
    """反链 n̄"""
    return Poset(np.eye(n, dtype=bool), tuple(labels or ()))


def one_plus_two() -> Poset:
    """1⊕2 = {★} ∪ {0 < 1}，id 0='0'、1='1'、2='*'"""
    le = np.eye(3, dtype=bool)
    le[0, 1] = True
    return Poset(le, ('0', '1', STAR))


def builtin_order(kind: str, n: int = 0, labels: Optional[Sequence[str]] = None) -> Poset:
    """
    内置序

    Args:
        kind: chain / antichain / one_plus_two
        n: 元素个数（one_plus_two 忽略）
        labels: 可选显示名

    Returns:
        Poset
    """
    if kind == 'one_plus_two':
        return one_plus_two()
    if n < 0:
        raise ValueError(f"n 不能为负: {n}")
    if kind == 'chain':
        return chain(n, labels)
    if kind == 'antichain':
        return antichain(n, labels)
    raise ValueError(f"未知的内置序: {kind}")


@dataclass(frozen=True)
class SumSpec:
    """Σ_{i∈I} Q_i 的描述"""
    index: Poset
    summands: Tuple[Poset, ...]

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(self.summands))
        if len(self.summands) != self.index.size:
            raise ValueError(f"summand 数量 {len(self.summands)} 与指标集大小 {self.index.size} 不一致")


@dataclass(frozen=True, eq=False)
class SumOrder:
    """
    sum_over_index 的结果：偏序本身加上 (i, q) <-> id 的记账
    """
    poset: Poset
    spec: SumSpec
    pairs: Tuple[Tuple[int, int], ...]
    _pair_ids: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_pair_ids', {pair: k for k, pair in enumerate(self.pairs)})

    @property
    def index(self) -> Poset:
        return self.spec.index

    @property
    def size(self) -> int:
        return self.poset.size

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def project(self, element: int) -> int:
        """(i, q) -> i"""
        return self.pairs[element][0]

    def component(self, element: int) -> int:
        """(i, q) -> q"""
        return self.pairs[element][1]

    def id_of(self, i: int, q: int) -> int:
        return self._pair_ids[(i, q)]


def sum_over_index(spec: SumSpec) -> SumOrder:
    """
    Σ_{i∈I} Q_i：(i,q) <= (j,r) 当且仅当 i ≺ j，或 i = j 且 q <= r

    id 按 (i, q) 字典序分配
    """
    pairs = [(i, q) for i in range(spec.index.size) for q in range(spec.summands[i].size)]
    n = len(pairs)
    le = np.zeros((n, n), dtype=bool)
    for a, (i, q) in enumerate(pairs):
        for b, (j, r) in enumerate(pairs):
            if i == j:
                le[a, b] = spec.summands[i].leq(q, r)
            else:
                le[a, b] = spec.index.lt(i, j)
    labels = tuple(f"{spec.index.label(i)}.{spec.summands[i].label(q)}" for i, q in pairs)
    return SumOrder(Poset(le, labels), spec, tuple(pairs))


@dataclass(frozen=True)
class Quotient:
    """拟序的反对称商"""
    poset: Poset
    projection: Tuple[int, ...]        # 原元素 -> 商中的 id
    representatives: Tuple[int, ...]   # 商中 id -> 代表元（类中最小 id）

    def to_dict(self) -> Dict:
        return {
            'poset': self.poset.to_dict(),
            'projection': list(self.projection),
            'representatives': list(self.representatives),
        }


def quotient_preorder(order: Preorder) -> Quotient:
    """
    按相互 <= 取商，每类以最小 id 为代表

    Args:
        order: 合法的拟序

    Returns:
        Quotient
    """
    le = order.le
    equivalent = le & le.T
    representatives: List[int] = []
    projection = [0] * order.size
    for element in range(order.size):
        rep = int(np.nonzero(equivalent[element])[0][0])
        if rep == element:
            representatives.append(element)
        projection[element] = representatives.index(rep)
    poset = Poset(le[np.ix_(representatives, representatives)],
                  tuple(order.labels[r] for r in representatives))
    log.debug("quotient: %d 个元素 -> %d 个等价类", order.size, poset.size)
    return Quotient(poset, tuple(projection), tuple(representatives))

"""
H_f(Q) 的项：叶子 (0, q) 或有限集合 (1, a)

所有项经全局表哈希合并：结构相同 ⇔ id 相同。集合的子项按 id 排序去重，
不做语义上的合并（序等价但结构不同的子项各自保留）
"""

import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from ..errors import BoundExceeded
from ..orders.poset import STAR, Preorder

log = logging.getLogger(__name__)

LEAF = 'leaf'
SET = 'set'

DEFAULT_MAX_INDEX = 64


@dataclass(frozen=True, eq=False, repr=False)
class HTerm:
    id: int
    kind: str
    label: Optional[str] = None
    children: Tuple['HTerm', ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def __eq__(self, other) -> bool:
        return isinstance(other, HTerm) and other.id == self.id

    def __hash__(self) -> int:
        return self.id

    def __repr__(self) -> str:
        return f"HTerm#{self.id}({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


class TermTable:
    """
    哈希合并表

    key 为 ('leaf', label) 或 ('set', 子项 id 元组)；插入加锁，查询无锁
    """

    def __init__(self):
        self._by_key: Dict[Tuple, HTerm] = {}
        self._terms: List[HTerm] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._terms)

    def intern(self, key: Tuple, build: Callable[[int], HTerm]) -> HTerm:
        term = self._by_key.get(key)
        if term is not None:
            return term
        with self._lock:
            term = self._by_key.get(key)
            if term is None:
                term = build(len(self._terms))
                self._terms.append(term)
                self._by_key[key] = term
        return term

    def __getitem__(self, term_id: int) -> HTerm:
        return self._terms[term_id]


TERMS = TermTable()


def mk_leaf(q, ground: Optional[Preorder] = None) -> HTerm:
    """
    叶子 (0, q)

    Raises:
        UnknownLabel: 给定 ground 且 q 不在其中
    """
    if ground is not None:
        q = ground.label(ground.index_of(q))
    label = str(q)
    return TERMS.intern((LEAF, label), lambda i: HTerm(i, LEAF, label))


def mk_set(children: Iterable[HTerm]) -> HTerm:
    """集合 (1, a)，重复的子项合并"""
    ordered = tuple(sorted(set(children), key=lambda c: c.id))
    key = (SET, tuple(c.id for c in ordered))
    return TERMS.intern(key, lambda i: HTerm(i, SET, None, ordered))


EMPTY = mk_set(())


def _iterated(n: int, atom: str, max_index: int) -> HTerm:
    if n < 0:
        raise ValueError(f"n 不能为负: {n}")
    if n > max_index:
        raise BoundExceeded(f"n = {n} 超出上限 {max_index}", witness={'n': n, 'max_index': max_index})
    fixed = [mk_leaf(STAR), mk_leaf(atom)]
    built: List[HTerm] = []
    for _ in range(n + 1):
        built.append(mk_set(fixed + built))
    return built[n]


def dot(n: int, max_index: int = DEFAULT_MAX_INDEX) -> HTerm:
    """ṅ = {★, 0} ∪ {ṁ | m < n}"""
    return _iterated(n, '0', max_index)


def ddot(n: int, max_index: int = DEFAULT_MAX_INDEX) -> HTerm:
    """n̈ = {★, 1} ∪ {m̈ | m < n}"""
    return _iterated(n, '1', max_index)


def subterms(x: HTerm) -> List[HTerm]:
    """全部不同子项（含自身），子项在前"""
    seen: Dict[int, HTerm] = {}
    stack = [(x, False)]
    order: List[HTerm] = []
    while stack:
        term, expanded = stack.pop()
        if expanded:
            order.append(term)
            continue
        if term.id in seen:
            continue
        seen[term.id] = term
        stack.append((term, True))
        stack.extend((c, False) for c in reversed(term.children) if c.id not in seen)
    return order


def dag_size(x: HTerm) -> int:
    return len(subterms(x))


def tree_size(x: HTerm) -> int:
    """不共享时的结点数"""
    sizes: Dict[int, int] = {}
    for term in subterms(x):
        sizes[term.id] = 1 + sum(sizes[c.id] for c in term.children)
    return sizes[x.id]


_SUPPORT: Dict[int, FrozenSet[str]] = {}


def support_labels(x: HTerm) -> FrozenSet[str]:
    """supp(x) 的叶子标签集合"""
    cached = _SUPPORT.get(x.id)
    if cached is not None:
        return cached
    for term in subterms(x):
        if term.id not in _SUPPORT:
            if term.is_leaf:
                _SUPPORT[term.id] = frozenset((term.label,))
            else:
                _SUPPORT[term.id] = frozenset().union(*(_SUPPORT[c.id] for c in term.children))
    return _SUPPORT[x.id]


def supp(x: HTerm) -> Tuple[HTerm, FrozenSet[str]]:
    """
    supp(x)：叶子标签集合

    Returns:
        (由这些叶子组成的集合项, 原始标签集合)
    """
    labels = support_labels(x)
    return mk_set(mk_leaf(q) for q in sorted(labels)), labels


def relabel(x: HTerm, mapping: Mapping[str, str]) -> HTerm:
    """按 mapping 替换叶子标签"""
    images: Dict[int, HTerm] = {}
    for term in subterms(x):
        if term.is_leaf:
            images[term.id] = mk_leaf(mapping[term.label])
        else:
            images[term.id] = mk_set(images[c.id] for c in term.children)
    return images[x.id]


def to_text(x: HTerm) -> str:
    """`{* 0 {* 0}}` 格式"""
    if x.is_leaf:
        return x.label
    return '{' + ' '.join(to_text(c) for c in x.children) + '}'

"""
穷举参照实现，只用于测试小规模输入
"""

from itertools import combinations, permutations, product
from typing import Optional, Sequence, Tuple

from src.arrays import ArrayFragment, classify_fragment
from src.barriers import Fragment
from src.hsets import HTerm
from src.orders import Poset, Preorder, is_embedding, is_order_reflecting, one_plus_two


def h_leq(x: HTerm, y: HTerm, ground: Preorder) -> bool:
    """不做记忆化的 ≤_{H(Q)}"""
    if x.is_leaf and y.is_leaf:
        return ground.leq(ground.index_of(x.label), ground.index_of(y.label))
    if x.is_leaf:
        return any(h_leq(x, c, ground) for c in y.children)
    if y.is_leaf:
        return all(h_leq(c, y, ground) for c in x.children)
    return all(any(h_leq(c, d, ground) for d in y.children) for c in x.children)


def has_embedding(source: Poset, target: Poset) -> bool:
    return any(is_embedding(source, target, m) for m in permutations(range(target.size), source.size))


def has_reflecting(source: Poset, target: Poset) -> bool:
    return any(is_order_reflecting(source, target, m) for m in product(range(target.size), repeat=source.size))


def contains_one_plus_two(poset: Poset) -> bool:
    return has_embedding(one_plus_two(), poset)


def has_antichain(poset: Poset, k: int) -> bool:
    return any(poset.is_antichain(c) for c in combinations(range(poset.size), k))


def bad_values(fragment: Fragment, target: Poset) -> Optional[Tuple[int, ...]]:
    """值字典序最小的坏数组"""
    for values in product(range(target.size), repeat=len(fragment.members)):
        if classify_fragment(ArrayFragment(fragment, values, target)).is_bad:
            return values
    return None


def is_bad_triple(ground: Poset, triple: Sequence[int]) -> bool:
    source = one_plus_two()
    return any(is_order_reflecting(source, ground, m) for m in permutations(triple))

"""
枚举带标号的有限偏序

逐个加入新元素：为其选一个下闭集 D 和上闭集 U，D ∩ U = ∅ 且 D 中每个元素都 <= U 中每个元素。
每个 n 元偏序恰好生成一次（去掉最后一个元素即得其父）
"""

from typing import Iterator, List

import numpy as np

from .poset import Poset


def _down_sets(le: np.ndarray) -> List[np.ndarray]:
    n = le.shape[0]
    result = []
    for mask in range(1 << n):
        members = np.array([(mask >> i) & 1 for i in range(n)], dtype=bool)
        # 下闭：x ∈ D 且 y <= x ⇒ y ∈ D
        if not np.any(le[:, members].any(axis=1) & ~members):
            result.append(members)
    return result


def _extend(le: np.ndarray) -> Iterator[np.ndarray]:
    n = le.shape[0]
    downs = _down_sets(le)
    ups = _down_sets(le.T)
    for down in downs:
        for up in ups:
            if np.any(down & up):
                continue
            if not le[np.ix_(down, up)].all():
                continue
            grown = np.zeros((n + 1, n + 1), dtype=bool)
            grown[:n, :n] = le
            grown[:n, n] = down
            grown[n, :n] = up
            grown[n, n] = True
            yield grown


def iter_posets(n: int) -> Iterator[Poset]:
    """
    n 个元素（id 0..n-1）上的全部偏序，各一次

    个数依次为 1, 1, 3, 19, 219, 4231 (n = 0..5)
    """
    if n < 0:
        raise ValueError(f"n 不能为负: {n}")
    layer = [np.zeros((0, 0), dtype=bool)]
    for _ in range(n):
        layer = [grown for le in layer for grown in _extend(le)]
    for le in layer:
        yield Poset(le)


def iter_posets_upto(n: int) -> Iterator[Poset]:
    for k in range(n + 1):
        yield from iter_posets(k)

"""
严格递增的有限自然数序列，以及 ⊏、⊂、⊲ 关系
"""

from itertools import combinations
from typing import Iterable, Sequence, Tuple

from ..errors import EmptySequence, SemanticError

FinSeq = Tuple[int, ...]


def is_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def as_finseq(seq: Iterable[int]) -> FinSeq:
    """
    转为 FinSeq

    Raises:
        SemanticError: 不是严格递增的自然数序列
    """
    seq = tuple(int(x) for x in seq)
    if any(x < 0 for x in seq) or not is_increasing(seq):
        raise SemanticError(f"不是严格递增的自然数序列: {seq}", witness=list(seq))
    return seq


def enum(values: Iterable[int]) -> FinSeq:
    """有限集合的递增枚举"""
    return tuple(sorted(set(values)))


def is_prefix(s: FinSeq, t: FinSeq) -> bool:
    """s ⊑ t"""
    return len(s) <= len(t) and t[:len(s)] == s


def is_proper_prefix(s: FinSeq, t: FinSeq) -> bool:
    """s ⊏ t"""
    return len(s) < len(t) and t[:len(s)] == s


def is_proper_subset(s: FinSeq, t: FinSeq) -> bool:
    """s ⊂ t（作为集合）"""
    return len(s) < len(t) and set(s) <= set(t)


def triangle_lt(s: FinSeq, t: FinSeq) -> bool:
    """
    s ⊲ t

    只依赖 s ∪ t：设 u 为 s ∪ t 的递增枚举，
    s 是 u 的前缀且 t 是 u 去掉最小元后的前缀

    Raises:
        EmptySequence: s 为空
    """
    if not s:
        raise EmptySequence("⊲ 的左端不能为空序列")
    u = enum(s + t)
    return u[:len(s)] == tuple(s) and u[1:1 + len(t)] == tuple(t)


def triangle_lt_by_extension(s: FinSeq, t: FinSeq, slack: int = 3) -> bool:
    """
    按定义穷举：是否存在 X ⊆ [0, max(s∪t)+slack] 使 s ⊏ X 且 t ⊏ X⁻

    只需考虑长度恰为 max(|s|+1, |t|+2) 的 X（更长的 X 截断后仍满足）
    """
    if not s:
        raise EmptySequence("⊲ 的左端不能为空序列")
    top = max(s + t) + slack
    length = max(len(s) + 1, len(t) + 2)
    fresh = range(s[-1] + 1, top + 1)
    for tail in combinations(fresh, length - len(s)):
        x = tuple(s) + tail
        if is_proper_prefix(t, x[1:]):
            return True
    return False

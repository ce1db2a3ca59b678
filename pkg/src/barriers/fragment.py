"""
block / barrier 的有限片段

片段 = 有限基集 V ⊆ [0, N) 上的一族 FinSeq；完备性以 R = 最长成员长度为准：
V 的每个 R 元递增枚举都恰有一个成员作为前缀
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..errors import (
    BudgetExceeded,
    HorizonExhausted,
    MemberNotFound,
    MissingPrefix,
    NotReached,
    SemanticError,
)
from .finseq import FinSeq, enum, is_increasing, is_proper_prefix, is_proper_subset, triangle_lt

log = logging.getLogger(__name__)


class FragmentKind(Enum):
    BLOCK = 'block'
    BARRIER = 'barrier'


@dataclass(frozen=True)
class Fragment:
    """
    成员按字典序排序去重，基集排序去重；horizon 缺省为 max(V)+1
    """
    base: Tuple[int, ...]
    members: Tuple[FinSeq, ...]
    horizon: int = 0
    kind: FragmentKind = FragmentKind.BARRIER

    def __post_init__(self):
        object.__setattr__(self, 'base', enum(int(v) for v in self.base))
        object.__setattr__(self, 'members', tuple(sorted({tuple(int(x) for x in m) for m in self.members})))
        if not self.horizon:
            object.__setattr__(self, 'horizon', (self.base[-1] + 1) if self.base else 0)
        if isinstance(self.kind, str):
            object.__setattr__(self, 'kind', FragmentKind(self.kind))

    @property
    def rank(self) -> int:
        """R：最长成员的长度"""
        return max((len(m) for m in self.members), default=0)

    @property
    def is_degenerate(self) -> bool:
        return not self.members

    def __contains__(self, s) -> bool:
        return tuple(s) in self._member_set

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def position(self) -> Dict[FinSeq, int]:
        return {m: k for k, m in enumerate(self.members)}

    def lookup(self, x: FinSeq) -> Optional[FinSeq]:
        """X 的成员前缀（最短的那个），没有时为 None"""
        for k in range(1, len(x) + 1):
            if x[:k] in self._member_set:
                return x[:k]
        return None

    def covering_sequences(self, length: Optional[int] = None) -> Iterator[FinSeq]:
        """V 的全部 length 元递增枚举，缺省 length = R"""
        return combinations(self.base, self.rank if length is None else length)

    @cached_property
    def triangle_pairs(self) -> Tuple[Tuple[FinSeq, FinSeq], ...]:
        """全部 s ⊲ t 的成员对，按 (s, t) 字典序"""
        return tuple((s, t) for s in self.members for t in self.members if s and triangle_lt(s, t))

    def reached_members(self, length: Optional[int] = None) -> List[FinSeq]:
        """作为某个 covering sequence 前缀出现的成员"""
        seen = {self.lookup(x) for x in self.covering_sequences(length)}
        return [m for m in self.members if m in seen]

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind.value,
            'base': list(self.base),
            'horizon': self.horizon,
            'members': [list(m) for m in self.members],
        }


class ViolationKind(Enum):
    EMPTY_MEMBER = 'empty_member'
    NOT_INCREASING = 'not_increasing'
    OUTSIDE_BASE = 'outside_base'
    OUTSIDE_HORIZON = 'outside_horizon'
    PREFIX = 'prefix'
    SUBSET = 'subset'
    UNCOVERED = 'uncovered'


@dataclass(frozen=True)
class FragmentViolation:
    kind: ViolationKind
    witness: Tuple = field(default_factory=tuple)

    def to_dict(self) -> Dict:
        return {'kind': self.kind.value, 'witness': [list(w) if isinstance(w, tuple) else w for w in self.witness]}


def validate_fragment(fragment: Fragment) -> Optional[FragmentViolation]:
    """
    检查片段

    依次检查：空成员、非递增、越出基集、越出 horizon、⊏ 反链、（barrier）⊂ 反链、完备性

    Returns:
        第一个违反项，合法时为 None
    """
    members = fragment.members
    base = set(fragment.base)
    for m in members:
        if not m:
            return FragmentViolation(ViolationKind.EMPTY_MEMBER, (m,))
        if not is_increasing(m):
            return FragmentViolation(ViolationKind.NOT_INCREASING, (m,))
        if not set(m) <= base:
            return FragmentViolation(ViolationKind.OUTSIDE_BASE, (m,))
    if fragment.base and (fragment.base[0] < 0 or fragment.base[-1] >= fragment.horizon):
        return FragmentViolation(ViolationKind.OUTSIDE_HORIZON, (fragment.horizon,))
    for s in members:
        for t in members:
            if is_proper_prefix(s, t):
                return FragmentViolation(ViolationKind.PREFIX, (s, t))
    if fragment.kind is FragmentKind.BARRIER:
        for s in members:
            for t in members:
                if is_proper_subset(s, t):
                    return FragmentViolation(ViolationKind.SUBSET, (s, t))
    for x in fragment.covering_sequences():
        if fragment.lookup(x) is None:
            return FragmentViolation(ViolationKind.UNCOVERED, (x,))
    return None


def uniform_fragment(base: Iterable[int], k: int, max_members: Optional[int] = None) -> Fragment:
    """
    [V]^k：V 的全部 k 元子集

    Raises:
        SemanticError: 不满足 |V| >= k >= 1
        BudgetExceeded: 成员数超过 max_members
    """
    base = enum(base)
    if not 1 <= k <= len(base):
        raise SemanticError(f"需要 |V| >= k >= 1，实际 |V|={len(base)}, k={k}", witness=k)
    if max_members is not None and comb(len(base), k) > max_members:
        raise BudgetExceeded(f"[V]^{k} 有 {comb(len(base), k)} 个成员，超出上限 {max_members}",
                             witness={'members': comb(len(base), k), 'limit': max_members})
    return Fragment(base, tuple(combinations(base, k)), kind=FragmentKind.BARRIER)


def sub_fragment_after(fragment: Fragment, s: FinSeq) -> Fragment:
    """
    B/s：首元大于 max(s) 的成员，基集同样截断

    Raises:
        MemberNotFound
    """
    s = tuple(s)
    if s not in fragment:
        raise MemberNotFound(f"{s} 不是片段成员", witness=list(s))
    top = s[-1]
    tail = Fragment(
        tuple(v for v in fragment.base if v > top),
        tuple(t for t in fragment.members if t and t[0] > top),
        fragment.horizon,
        fragment.kind,
    )
    if tail.is_degenerate:
        log.warning("B/%s 为空（退化片段）", s)
    else:
        violation = validate_fragment(tail)
        if violation is not None:
            log.warning("B/%s 在截断后的基集上不完备: %s", s, violation.to_dict())
    return tail


def chain_intervals(fragment: Fragment, s: FinSeq, t: FinSeq, dense: bool = True) -> List[FinSeq]:
    """
    连接 s 与 t 的区间链 r⁰ = s ⊲ r¹ ⊲ ... ⊲ rⁿ = t

    u 为 s、（dense 时）介于 max(s) 与 min(t) 之间的基集元素、t 依次拼接，
    不够长时用最小的新基集元素延长；rⁱ 是 u 去掉前 i 个元素后的唯一成员前缀

    Raises:
        MemberNotFound, MissingPrefix, NotReached
    """
    s, t = tuple(s), tuple(t)
    for member in (s, t):
        if member not in fragment:
            raise MemberNotFound(f"{member} 不是片段成员", witness=list(member))
    if t[0] <= s[-1]:
        if triangle_lt(s, t):
            return [s, t]
        raise NotReached(f"{t} 不在 B/{s} 中", witness=[list(s), list(t)])

    gap = [v for v in fragment.base if s[-1] < v < t[0]] if dense else []
    u = list(s) + gap + list(t)
    fresh = iter(v for v in fragment.base if v > t[-1])
    target = u.index(t[0])
    chain: List[FinSeq] = []
    for i in range(target + 1):
        r = fragment.lookup(tuple(u[i:]))
        while r is None:
            nxt = next(fresh, None)
            if nxt is None:
                raise MissingPrefix(f"{tuple(u[i:])} 在片段内没有成员前缀", witness=list(u[i:]))
            u.append(nxt)
            r = fragment.lookup(tuple(u[i:]))
        chain.append(r)
    if chain[-1] != t:
        raise NotReached(f"区间链没有到达 {t}", witness=[list(r) for r in chain])
    log.debug("chain_intervals %s -> %s: %d 步", s, t, len(chain) - 1)
    return chain


@dataclass(frozen=True)
class Refinement:
    """block 细化为 barrier：新成员 -> 它所延长的原成员"""
    fragment: Fragment
    mapping: Dict[FinSeq, FinSeq]

    def to_dict(self) -> Dict:
        return {
            'fragment': self.fragment.to_dict(),
            'refinement': [[list(t), list(s)] for t, s in sorted(self.mapping.items())],
        }


def _least_subset_pair(members: Iterable[FinSeq]) -> Optional[Tuple[FinSeq, FinSeq]]:
    members = sorted(members)
    for s in members:
        for t in members:
            if is_proper_subset(s, t):
                return s, t
    return None


def block_to_barrier(fragment: Fragment) -> Refinement:
    """
    把 block 片段细化为 barrier 片段

    每次取字典序最小的 ⊂ 可比对 (s, t)，把 s 换成它在基集内延长到长度 R 的全部序列

    Raises:
        SemanticError: 输入不是合法 block
        HorizonExhausted: 某个成员在基集内无法延长到长度 R
    """
    violation = validate_fragment(Fragment(fragment.base, fragment.members, fragment.horizon, FragmentKind.BLOCK))
    if violation is not None:
        raise SemanticError("输入不是合法的 block 片段", witness=violation.to_dict())
    rank = fragment.rank
    mapping: Dict[FinSeq, FinSeq] = {m: m for m in fragment.members}
    while True:
        pair = _least_subset_pair(mapping)
        if pair is None:
            break
        s = pair[0]
        origin = mapping.pop(s)
        fresh = [v for v in fragment.base if v > s[-1]]
        extensions = [s + tail for tail in combinations(fresh, rank - len(s))]
        if not extensions:
            raise HorizonExhausted(f"{s} 在基集内无法延长到长度 {rank}", witness=list(s))
        for e in extensions:
            mapping[e] = origin
        log.debug("block_to_barrier: %s 延长为 %d 个序列", s, len(extensions))
    barrier = Fragment(fragment.base, tuple(mapping), fragment.horizon, FragmentKind.BARRIER)
    return Refinement(barrier, dict(mapping))

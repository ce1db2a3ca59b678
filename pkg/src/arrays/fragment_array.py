"""
数组片段：片段成员 -> 目标序中的值

目标可以是 Poset（值为元素 id）、sum_over_index 的 SumOrder（值为和序中的 id）
或 OmegaAlpha（值为弱递减序列）
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union

from ..barriers.finseq import FinSeq
from ..barriers.fragment import Fragment, uniform_fragment
from ..errors import NotASumTarget, NotDescending, SemanticError
from ..orders.maps import OrderMap
from ..orders.poset import Poset, SumOrder
from ..ordinals.cnf import Comparison
from ..ordinals.omega import OmegaAlpha

log = logging.getLogger(__name__)

Target = Union[Poset, SumOrder, OmegaAlpha]


def target_poset(target: Target) -> Optional[Poset]:
    """有限目标对应的 Poset；ω^α 返回 None"""
    if isinstance(target, SumOrder):
        return target.poset
    if isinstance(target, Poset):
        return target
    return None


def value_label(target: Target, value: Any) -> Any:
    poset = target_poset(target)
    if poset is not None:
        return poset.label(value)
    return [str(e) if not isinstance(e, int) else e for e in value]


@dataclass(frozen=True, eq=False)
class ArrayFragment:
    """
    f: B -> Q 的有限片段

    values 与 domain.members 一一对应；F(X) 由 X 的唯一成员前缀取值
    """
    domain: Fragment
    values: Tuple[Any, ...]
    target: Target

    def __post_init__(self):
        values = tuple(tuple(v) if isinstance(self.target, OmegaAlpha) else int(v) for v in self.values)
        if len(values) != len(self.domain.members):
            raise SemanticError(f"值的个数 {len(values)} 与成员个数 {len(self.domain.members)} 不一致",
                                witness={'values': len(values), 'members': len(self.domain.members)})
        poset = target_poset(self.target)
        if poset is not None:
            outside = [v for v in values if not 0 <= v < poset.size]
            if outside:
                raise SemanticError(f"值不在目标序中: {outside[0]}", witness=outside[0])
        else:
            for v in values:
                self.target.check(v)
        object.__setattr__(self, 'values', values)

    @cached_property
    def _by_member(self) -> Dict[FinSeq, Any]:
        return dict(zip(self.domain.members, self.values))

    def __call__(self, member: FinSeq) -> Any:
        return self._by_member[tuple(member)]

    def at(self, x: FinSeq) -> Optional[Any]:
        """F(X)"""
        member = self.domain.lookup(tuple(x))
        return None if member is None else self._by_member[member]

    def leq(self, a: Any, b: Any) -> bool:
        return self.target.leq(a, b)

    def restrict(self, domain: Fragment) -> 'ArrayFragment':
        """限制到子片段（成员须为本片段成员）"""
        return ArrayFragment(domain, tuple(self(m) for m in domain.members), self.target)

    def with_values(self, values: Sequence[Any]) -> 'ArrayFragment':
        return ArrayFragment(self.domain, tuple(values), self.target)

    def to_dict(self) -> Dict:
        return {
            'domain': self.domain.to_dict(),
            'values': [value_label(self.target, v) for v in self.values],
        }


class Verdict(Enum):
    GOOD = 'good'
    BAD = 'bad'
    VACUOUSLY_BAD = 'vacuously_bad'


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: Optional[Tuple[FinSeq, FinSeq]] = None

    @property
    def is_bad(self) -> bool:
        return self.verdict is not Verdict.GOOD

    def to_dict(self) -> Dict:
        return {
            'verdict': self.verdict.value,
            'witness': [list(m) for m in self.witness] if self.witness else None,
        }


def classify_fragment(f: ArrayFragment) -> Classification:
    """
    good：存在 s ⊲ t 且 f(s) <= f(t)，witness 为字典序最小的这样一对；
    bad：存在 ⊲ 对但都不满足；vacuously_bad：片段内没有 ⊲ 对
    """
    pairs = f.domain.triangle_pairs
    if not pairs:
        return Classification(Verdict.VACUOUSLY_BAD)
    for s, t in pairs:
        if f.leq(f(s), f(t)):
            return Classification(Verdict.GOOD, (s, t))
    return Classification(Verdict.BAD)


def shift_witness(f: ArrayFragment) -> Optional[Tuple[FinSeq, FinSeq, FinSeq]]:
    """
    序列层面的好：字典序最小的 X（长度 R+1）使 F(X) <= F(X⁻)

    Returns:
        (X, F 的前缀成员, F⁻ 的前缀成员)，没有时为 None
    """
    for x in f.domain.covering_sequences(f.domain.rank + 1):
        s, t = f.domain.lookup(x), f.domain.lookup(x[1:])
        if s is not None and t is not None and f.leq(f(s), f(t)):
            return x, s, t
    return None


def transport_array(f: ArrayFragment, mapping: OrderMap) -> ArrayFragment:
    """
    与保序反射映射复合：m∘f；坏数组复合后仍然是坏的

    Raises:
        SemanticError: 映射源不是 f 的目标，或映射不反射序
    """
    if target_poset(f.target) != mapping.source:
        raise SemanticError("映射的源与数组目标不一致")
    if not mapping.is_order_reflecting:
        raise SemanticError("映射不反射序", witness=mapping.to_dict())
    return ArrayFragment(f.domain, tuple(mapping(v) for v in f.values), mapping.target)


def first_coordinate_projection(f: ArrayFragment) -> ArrayFragment:
    """
    f₀(s) = f(s) 的指标分量

    Raises:
        NotASumTarget
    """
    if not isinstance(f.target, SumOrder):
        raise NotASumTarget("目标不是 sum_over_index 构造的和序")
    return ArrayFragment(f.domain, tuple(f.target.project(v) for v in f.values), f.target.index)


def induced_from_descending(sigmas: Sequence[Sequence[Any]], base: Iterable[int],
                            alpha: Optional[Poset] = None) -> ArrayFragment:
    """
    [V]^1 上的数组 f((x)) = σ^x

    σ 按下标 x 取值，严格下降保证 x < y 时 f((x)) 不 <= f((y))

    Raises:
        NotDescending: witness 为第一个未严格下降的位置
        SemanticError: σ 的个数不足 max(V)+1
    """
    order = OmegaAlpha(alpha)
    sigmas = [order.check(s) for s in sigmas]
    for k in range(1, len(sigmas)):
        if order.compare(sigmas[k - 1], sigmas[k]) is not Comparison.GT:
            raise NotDescending(f"σ 在位置 {k} 没有严格下降", witness=k)
    domain = uniform_fragment(base, 1)
    if domain.base[-1] >= len(sigmas):
        raise SemanticError(f"需要至少 {domain.base[-1] + 1} 个 σ，实际 {len(sigmas)}",
                            witness=len(sigmas))
    return ArrayFragment(domain, tuple(sigmas[m[0]] for m in domain.members), order)

"""
良序和上的稳定化与 ω^α 的去首项

坏数组 f 进入 Σ_{i∈I} Q_i 时，f₀ 沿区间链弱递减，因而在某个 B/s 上取常值 i = f₀(s)，
尾部 f₁ 是进入 Q_i 的坏数组；ω^α 的情形同理以首项 g(t)₀ 代替 f₀
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from ..barriers.finseq import FinSeq
from ..barriers.fragment import sub_fragment_after
from ..errors import EmptyValueSequence, MemberNotFound, NotBad, NotStabilized, PostconditionViolation, SemanticError
from ..orders.poset import SumOrder
from ..ordinals.omega import OmegaAlpha, head_remove
from .fragment_array import ArrayFragment, classify_fragment, first_coordinate_projection
from .ranking import SuffixRanking

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Stabilization:
    member: FinSeq
    index: Any
    tail: ArrayFragment
    degenerate: bool

    def to_dict(self) -> Dict:
        return {
            'member': list(self.member),
            'index': self.index if isinstance(self.index, (int, str)) else str(self.index),
            'tail': self.tail.to_dict(),
            'degenerate': self.degenerate,
        }


def _least_stable_member(f: ArrayFragment, key: Callable[[Any], Any]) -> Optional[FinSeq]:
    """最小的 s 使 key(f(t)) 在 B/s 上恒等于 key(f(s))"""
    for s in f.domain.members:
        head = key(f(s))
        if head is None:
            continue
        top = s[-1]
        if all(key(f(t)) == head for t in f.domain.members if t[0] > top):
            return s
    return None


def _require_bad(f: ArrayFragment) -> None:
    classification = classify_fragment(f)
    if not classification.is_bad:
        raise NotBad("数组是好的", witness=[list(m) for m in classification.witness])


def stabilize_first_coordinate(f: ArrayFragment) -> Optional[Stabilization]:
    """
    找最小的 s 使 f₀ 在 B/s 上取常值 i = f₀(s)

    Returns:
        Stabilization(s, i, f₁: B/s -> Q_i, degenerate)；片段内没有稳定点时为 None

    Raises:
        NotASumTarget, NotBad
    """
    projection = first_coordinate_projection(f)
    _require_bad(f)
    target: SumOrder = f.target
    s = _least_stable_member(projection, lambda v: v)
    if s is None:
        log.warning("stabilize_first_coordinate: 片段内 f₀ 没有稳定")
        return None
    i = projection(s)
    domain = sub_fragment_after(f.domain, s)
    tail = ArrayFragment(domain, tuple(target.component(f(t)) for t in domain.members), target.spec.summands[i])
    log.debug("stabilize_first_coordinate: s=%s, i=%s, |B/s|=%d", s, i, len(domain.members))
    return Stabilization(s, i, tail, domain.is_degenerate)


def stabilize_head(g: ArrayFragment) -> Optional[Stabilization]:
    """
    ω^α 版本：最小的 r 使首项 g(t)₀ 在 B/r 上恒等于 g(r)₀

    tail 为 g 在 B/r 上的限制

    Raises:
        SemanticError: 目标不是 ω^α
        NotBad
    """
    if not isinstance(g.target, OmegaAlpha):
        raise SemanticError("目标不是 ω^α")
    _require_bad(g)
    r = _least_stable_member(g, lambda sigma: sigma[0] if sigma else None)
    if r is None:
        log.warning("stabilize_head: 片段内首项没有稳定")
        return None
    domain = sub_fragment_after(g.domain, r)
    return Stabilization(r, g(r)[0], g.restrict(domain), domain.is_degenerate)


def head_removal_derivation(g: ArrayFragment, r: FinSeq) -> ArrayFragment:
    """
    B/r 上的 f(t) = g(t)⋆（去掉首项）

    事后检查 f 是坏的，且逐点 g(t)⋆ <′ g(t)（后缀排名）

    Raises:
        MemberNotFound, EmptyValueSequence, NotStabilized, NotBad
    """
    r = tuple(r)
    if r not in g.domain:
        raise MemberNotFound(f"{r} 不是片段成员", witness=list(r))
    empty = [m for m in g.domain.members if not g(m)]
    if empty:
        raise EmptyValueSequence(f"g({empty[0]}) 是空序列", witness=list(empty[0]))
    domain = sub_fragment_after(g.domain, r)
    heads = {g(t)[0] for t in domain.members}
    if len(heads) > 1:
        raise NotStabilized(f"首项在 B/{r} 上不是常值", witness=sorted(str(h) for h in heads))
    f = ArrayFragment(domain, tuple(head_remove(g(t)) for t in domain.members), g.target)

    classification = classify_fragment(f)
    if not classification.is_bad:
        raise NotBad("去首项后的数组是好的", witness=[list(m) for m in classification.witness])
    ranking = SuffixRanking()
    for t in domain.members:
        if not ranking.lt(f(t), g(t)):
            raise PostconditionViolation(f"g({t})⋆ 不是 g({t}) 的真后缀", witness=list(t))
    return f

"""
barrier 命令组
"""

from argparse import Namespace
from typing import Dict

from ..barriers.finseq import is_proper_prefix, is_proper_subset, triangle_lt
from ..barriers.fragment import (
    block_to_barrier,
    chain_intervals,
    sub_fragment_after,
    uniform_fragment,
    validate_fragment,
)
from ..utils.documents import fragment_from_document, load_yaml
from ..utils.parsers import parse_finseq
from .base import Action, BaseReporter, Outcome


def load_fragment(source: str):
    return fragment_from_document(load_yaml(source))


class BarrierReporter(BaseReporter):
    """有限序列关系与片段构造"""

    group = 'barrier'

    def actions(self) -> Dict[str, Action]:
        return {
            'rel': self.rel,
            'uniform': self.uniform,
            'validate': self.validate,
            'after': self.after,
            'chain': self.chain,
            'refine': self.refine,
        }

    def rel(self, args: Namespace) -> Outcome:
        s, t = parse_finseq(args.s), parse_finseq(args.t)
        return Outcome({
            'triangle': triangle_lt(s, t),
            'prefix': is_proper_prefix(s, t),
            'subset': is_proper_subset(s, t),
        })

    def uniform(self, args: Namespace) -> Outcome:
        fragment = uniform_fragment(range(args.base), args.k, self.config.barrier_max_members)
        return Outcome(fragment.to_dict())

    def validate(self, args: Namespace) -> Outcome:
        fragment = load_fragment(args.fragment)
        violation = validate_fragment(fragment)
        if violation is not None:
            return Outcome({'valid': False, 'violation': violation.to_dict()}, [violation.to_dict()], ok=False)
        return Outcome({'valid': True, 'fragment': fragment.to_dict()})

    def after(self, args: Namespace) -> Outcome:
        tail = sub_fragment_after(load_fragment(args.fragment), parse_finseq(args.s))
        return Outcome({'fragment': tail.to_dict(), 'degenerate': tail.is_degenerate})

    def chain(self, args: Namespace) -> Outcome:
        chain = chain_intervals(load_fragment(args.fragment), parse_finseq(args.s), parse_finseq(args.t),
                                dense=not args.sparse)
        return Outcome({'chain': [list(r) for r in chain], 'length': len(chain) - 1})

    def refine(self, args: Namespace) -> Outcome:
        return Outcome(block_to_barrier(load_fragment(args.fragment)).to_dict())

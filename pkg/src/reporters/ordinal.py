"""
ordinal 命令组
"""

from argparse import Namespace
from typing import Dict

from ..ordinals.cnf import cnf_add, cnf_compare, to_text
from ..ordinals.omega import OmegaAlpha, decseq_to_cnf, head_remove, suffix_ranking
from ..utils.documents import parse_poset
from ..utils.parsers import parse_cnf, parse_decseq
from .base import Action, BaseReporter, Outcome


def _entries(sigma) -> list:
    return [e if isinstance(e, int) else to_text(e) for e in sigma]


class OrdinalReporter(BaseReporter):
    """CNF 记号与 ω^α"""

    group = 'ordinal'

    def actions(self) -> Dict[str, Action]:
        return {
            'compare': self.compare,
            'add': self.add,
            'omega-compare': self.omega_compare,
            'suffix': self.suffix,
            'head': self.head,
        }

    def _omega(self, args: Namespace) -> OmegaAlpha:
        return OmegaAlpha(None if args.alpha == 'cnf' else parse_poset(args.alpha))

    def _decseq(self, order: OmegaAlpha, text: str):
        return order.check(parse_decseq(text, cnf=order.alpha is None))

    def compare(self, args: Namespace) -> Outcome:
        return Outcome({'comparison': cnf_compare(parse_cnf(args.a), parse_cnf(args.b)).value})

    def add(self, args: Namespace) -> Outcome:
        return Outcome({'sum': to_text(cnf_add(parse_cnf(args.a), parse_cnf(args.b)))})

    def omega_compare(self, args: Namespace) -> Outcome:
        order = self._omega(args)
        sigma, tau = self._decseq(order, args.sigma), self._decseq(order, args.tau)
        return Outcome({
            'comparison': order.compare(sigma, tau).value,
            'ordinals': [to_text(decseq_to_cnf(sigma, order.alpha)), to_text(decseq_to_cnf(tau, order.alpha))],
        })

    def suffix(self, args: Namespace) -> Outcome:
        order = self._omega(args)
        sigma, tau = self._decseq(order, args.sigma), self._decseq(order, args.tau)
        return Outcome({'suffix': suffix_ranking(sigma, tau)})

    def head(self, args: Namespace) -> Outcome:
        order = self._omega(args)
        return Outcome({'result': _entries(head_remove(self._decseq(order, args.sigma)))})

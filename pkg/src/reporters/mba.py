"""
mba 命令组
"""

from argparse import Namespace
from typing import Dict

from ..mba.power import build_fin_subset_order, check_strict_partial_order, check_wellfounded
from ..mba.triples import bad_triples, minimal_bad_triple, strict_down_set
from ..utils.documents import parse_poset
from .base import Action, BaseReporter, Outcome


class MbaReporter(BaseReporter):
    """[Q]^{<=n} 与坏三元组"""

    group = 'mba'

    def actions(self) -> Dict[str, Action]:
        return {
            'power': self.power,
            'wellfounded': self.wellfounded,
            'triples': self.triples,
            'minimal': self.minimal,
            'downset': self.downset,
        }

    def _order(self, args: Namespace):
        return build_fin_subset_order(parse_poset(args.ground), args.n, self.config.mba_max_carrier)

    def power(self, args: Namespace) -> Outcome:
        return Outcome(self._order(args).to_dict())

    def wellfounded(self, args: Namespace) -> Outcome:
        order = self._order(args)
        acyclic, strict = check_wellfounded(order), check_strict_partial_order(order)
        witnesses = [w for w in (acyclic.cycle, strict.witness) if w]
        return Outcome({'carrier': order.size, 'wellfounded': acyclic.to_dict(), 'strict_order': strict.to_dict()},
                       witnesses, ok=acyclic.ok and strict.ok)

    def triples(self, args: Namespace) -> Outcome:
        found = bad_triples(parse_poset(args.ground), self.budget)
        return Outcome({'count': len(found), 'triples': [t.to_dict() for t in found]})

    def minimal(self, args: Namespace) -> Outcome:
        found = minimal_bad_triple(parse_poset(args.ground), self.budget)
        return Outcome({'found': found is not None, 'triple': found.to_dict() if found else None})

    def downset(self, args: Namespace) -> Outcome:
        ground = parse_poset(args.ground)
        down = strict_down_set(ground, [label.strip() for label in args.b.split(',') if label.strip()])
        return Outcome(down.to_dict())

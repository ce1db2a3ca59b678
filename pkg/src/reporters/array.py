"""
array 命令组
"""

from argparse import Namespace
from typing import Dict

from ..arrays.fragment_array import classify_fragment, induced_from_descending, target_poset
from ..arrays.minimal import minimal_bad_search
from ..arrays.ranking import compare_pointwise
from ..arrays.search import max_bad_horizon, search_bad_fragment
from ..arrays.sums import head_removal_derivation, stabilize_first_coordinate, stabilize_head
from ..errors import SemanticError
from ..orders.poset import SumOrder
from ..utils.documents import parse_array, parse_poset, parse_ranking, parse_target
from ..utils.parsers import parse_decseq, parse_finseq
from .barrier import load_fragment
from .base import Action, BaseReporter, Outcome


class ArrayReporter(BaseReporter):
    """数组片段：分类、坏数组搜索、稳定化、逐点比较、极小化"""

    group = 'array'

    def actions(self) -> Dict[str, Action]:
        return {
            'classify': self.classify,
            'search-bad': self.search_bad,
            'max-horizon': self.max_horizon,
            'induce': self.induce,
            'stabilize': self.stabilize,
            'derive-tail': self.derive_tail,
            'compare': self.compare,
            'minimize': self.minimize,
        }

    def classify(self, args: Namespace) -> Outcome:
        classification = classify_fragment(parse_array(args.array))
        witnesses = [classification.to_dict()['witness']] if classification.witness else []
        return Outcome(classification.to_dict(), witnesses)

    def search_bad(self, args: Namespace) -> Outcome:
        found = search_bad_fragment(load_fragment(args.fragment), parse_target(args.target),
                                    self.budget, self.workers)
        return Outcome({'found': found is not None, 'array': found.to_dict() if found else None})

    def max_horizon(self, args: Namespace) -> Outcome:
        target = parse_target(args.target)
        n = max_bad_horizon(args.rank, target, args.n_max, self.budget, self.workers)
        return Outcome({'rank': args.rank, 'n_max': args.n_max, 'horizon': n})

    def induce(self, args: Namespace) -> Outcome:
        alpha = None if args.alpha == 'cnf' else parse_poset(args.alpha)
        sigmas = [parse_decseq(s, cnf=alpha is None) for s in args.sigmas.split(';')]
        f = induced_from_descending(sigmas, range(args.base), alpha)
        return Outcome({'array': f.to_dict(), 'classification': classify_fragment(f).to_dict()})

    def stabilize(self, args: Namespace) -> Outcome:
        f = parse_array(args.array)
        if isinstance(f.target, SumOrder):
            result = stabilize_first_coordinate(f)
        elif target_poset(f.target) is None:
            result = stabilize_head(f)
        else:
            raise SemanticError("stabilize 需要和序或 ω^α 目标")
        return Outcome({'stable': result is not None, 'stabilization': result.to_dict() if result else None})

    def derive_tail(self, args: Namespace) -> Outcome:
        f = head_removal_derivation(parse_array(args.array), parse_finseq(args.r))
        return Outcome({'array': f.to_dict(), 'classification': classify_fragment(f).to_dict()})

    def compare(self, args: Namespace) -> Outcome:
        left = parse_array(args.left)
        right = parse_array(args.right, left.target)
        ranking = parse_ranking(args.ranking, left.target)
        return Outcome({'comparison': compare_pointwise(left, right, ranking).value})

    def minimize(self, args: Namespace) -> Outcome:
        f0 = parse_array(args.array)
        result = minimal_bad_search(f0, parse_ranking(args.ranking, f0.target), self.budget)
        return Outcome(result.to_dict())

"""
poset 命令组
"""

from argparse import Namespace
from typing import Dict

from ..errors import SemanticError
from ..orders.decomp import ForbiddenWitness, classify_width2, decompose, embed_into_two_times_gamma
from ..orders.maps import find_embedding, find_order_reflecting
from ..orders.poset import check_poset, quotient_preorder, validate_poset
from ..utils.documents import builtin_literal, load_yaml, parse_poset, preorder_from_document
from .base import Action, BaseReporter, Outcome


class PosetReporter(BaseReporter):
    """偏序：校验、分解、宽度 2 分类、映射搜索、商、2̄·γ 嵌入"""

    group = 'poset'

    def actions(self) -> Dict[str, Action]:
        return {
            'validate': self.validate,
            'decompose': self.decompose,
            'classify': self.classify,
            'embed': self.embed,
            'reflect': self.reflect,
            'quotient': self.quotient,
            'layers': self.layers,
        }

    def validate(self, args: Namespace) -> Outcome:
        builtin = builtin_literal(args.input)
        if builtin is not None:
            return Outcome({'valid': True, 'poset': builtin.to_dict()})
        doc = load_yaml(args.input)
        if not isinstance(doc, dict):
            raise SemanticError(f"无法识别的偏序输入: {args.input}", witness=args.input)
        elements, pairs = doc.get('elements', 0), doc.get('pairs') or []
        closure = bool(args.closure or doc.get('closure', False))
        violation = check_poset(elements, pairs, closure)
        if violation is not None:
            return Outcome({'valid': False, 'axiom': violation.axiom, 'message': str(violation)},
                           [violation.witness], ok=False)
        return Outcome({'valid': True, 'poset': validate_poset(elements, pairs, closure).to_dict()})

    def decompose(self, args: Namespace) -> Outcome:
        result = decompose(parse_poset(args.input))
        if isinstance(result, ForbiddenWitness):
            return Outcome({'decomposable': False, 'witness': result.to_dict()}, [result.to_dict()])
        return Outcome({'decomposable': True, 'decomposition': result.to_dict()})

    def classify(self, args: Namespace) -> Outcome:
        classification = classify_width2(parse_poset(args.input))
        witnesses = [classification.witness.to_dict()] if classification.witness else []
        return Outcome(classification.to_dict(), witnesses)

    def _search(self, args: Namespace, find) -> Outcome:
        found = find(parse_poset(args.source), parse_poset(args.target), self.budget, self.workers)
        return Outcome({'found': found is not None, 'map': found.to_dict() if found else None})

    def embed(self, args: Namespace) -> Outcome:
        return self._search(args, find_embedding)

    def reflect(self, args: Namespace) -> Outcome:
        return self._search(args, find_order_reflecting)

    def quotient(self, args: Namespace) -> Outcome:
        return Outcome(quotient_preorder(preorder_from_document(load_yaml(args.input))).to_dict())

    def layers(self, args: Namespace) -> Outcome:
        mapping = embed_into_two_times_gamma(parse_poset(args.input))
        return Outcome({'gamma': mapping.target.size // 2, **mapping.to_dict()})

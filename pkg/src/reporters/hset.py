"""
hset 命令组
"""

from argparse import Namespace
from typing import Dict

from ..hsets.order import antichain3_check, antichain_ground, h_leq, verify_interlocked
from ..hsets.terms import HTerm, dag_size, ddot, dot, supp, to_text, tree_size
from ..utils.documents import parse_poset
from ..utils.parsers import parse_term
from .base import Action, BaseReporter, Outcome

# 超过这个树大小的项只输出统计，不输出文本
MAX_TEXT_TREE = 4096


def describe(term: HTerm) -> Dict:
    size = tree_size(term)
    return {
        'id': term.id,
        'text': to_text(term) if size <= MAX_TEXT_TREE else None,
        'children': len(term.children),
        'dag_size': dag_size(term),
        'tree_size': size,
    }


def parse_ground(text: str):
    """`antichain` 表示标签为 0、1、* 的 3̄"""
    return antichain_ground() if text == 'antichain' else parse_poset(text)


class HsetReporter(BaseReporter):
    """H_f(Q) 项与比较"""

    group = 'hset'

    def actions(self) -> Dict[str, Action]:
        return {
            'leq': self.leq,
            'supp': self.supp,
            'dot': self.dot,
            'ddot': self.ddot,
            'verify-interlocked': self.verify_interlocked,
            'antichain3': self.antichain3,
        }

    def leq(self, args: Namespace) -> Outcome:
        ground = parse_ground(args.ground)
        x, y = parse_term(args.x, ground), parse_term(args.y, ground)
        return Outcome({'leq': h_leq(x, y, ground), 'geq': h_leq(y, x, ground)})

    def supp(self, args: Namespace) -> Outcome:
        term, labels = supp(parse_term(args.x))
        return Outcome({'term': to_text(term), 'labels': sorted(labels)})

    def dot(self, args: Namespace) -> Outcome:
        return Outcome(describe(dot(args.n, self.config.hset_max_index)))

    def ddot(self, args: Namespace) -> Outcome:
        return Outcome(describe(ddot(args.n, self.config.hset_max_index)))

    def verify_interlocked(self, args: Namespace) -> Outcome:
        report = verify_interlocked(args.bound, parse_ground(args.ground), self.config.hset_max_index)
        return Outcome(report.to_dict(), report.violations, ok=report.ok)

    def antichain3(self, args: Namespace) -> Outcome:
        report = antichain3_check()
        return Outcome(report.to_dict(), ok=report.verdict == 'antichain')

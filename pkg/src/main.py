"""
BQO Workbench - 主入口
有限序论计算工具：偏序分解、barrier 片段、坏数组、H_f(Q)、序数记号、[Q]^{<=n}

用法:
    python -m src.main poset classify one_plus_two
    python -m src.main hset antichain3
    python -m src.main array max-horizon --rank 1 --target antichain:3
    python -m src.main --format json ordinal compare 'w^(w)' 'w*3 + 1'
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from .config import Config
from .reporters import REPORTERS
from .reporters.base import STATUS_USAGE, Report

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """用法错误不直接退出，交给 run() 生成 usage_error 报告"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _add_poset(sub) -> None:
    group = sub.add_parser('poset', help='有限偏序').add_subparsers(dest='action', required=True)
    validate = group.add_parser('validate', help='校验偏序文档')
    validate.add_argument('input', help='偏序文档路径、内联 YAML 或内置字面量')
    validate.add_argument('--closure', action='store_true', help='先做自反传递闭包')
    for action, text in (('decompose', '反链线性和分解'), ('classify', '宽度 2 分类'),
                         ('layers', '嵌入 2̄·γ'), ('quotient', '拟序取商')):
        group.add_parser(action, help=text).add_argument('input')
    for action, text in (('embed', '搜索嵌入'), ('reflect', '搜索保序反射映射')):
        parser = group.add_parser(action, help=text)
        parser.add_argument('source')
        parser.add_argument('target')


def _add_barrier(sub) -> None:
    group = sub.add_parser('barrier', help='有限序列与 barrier 片段').add_subparsers(dest='action', required=True)
    rel = group.add_parser('rel', help='s 与 t 之间的 ⊲、⊏、⊂')
    rel.add_argument('s')
    rel.add_argument('t')
    uniform = group.add_parser('uniform', help='[0,N)^k')
    uniform.add_argument('base', type=int, help='N')
    uniform.add_argument('k', type=int)
    for action, text in (('validate', '检查片段'), ('refine', 'block 细化为 barrier')):
        group.add_parser(action, help=text).add_argument('fragment')
    after = group.add_parser('after', help='B/s')
    after.add_argument('fragment')
    after.add_argument('s')
    chain = group.add_parser('chain', help='区间链')
    chain.add_argument('fragment')
    chain.add_argument('s')
    chain.add_argument('t')
    chain.add_argument('--sparse', action='store_true', help='只用 s∪t 的元素，不插入中间的基集元素')


def _add_array(sub) -> None:
    group = sub.add_parser('array', help='数组片段').add_subparsers(dest='action', required=True)
    for action, text in (('classify', '好/坏判定'), ('stabilize', '首坐标稳定化')):
        group.add_parser(action, help=text).add_argument('array')
    search = group.add_parser('search-bad', help='字典序最小的坏数组')
    search.add_argument('fragment')
    search.add_argument('--target', required=True)
    horizon = group.add_parser('max-horizon', help='存在坏数组的最大 N')
    horizon.add_argument('--rank', type=int, required=True)
    horizon.add_argument('--target', required=True)
    horizon.add_argument('--n-max', type=int, default=8)
    induce = group.add_parser('induce', help='由 ω^α 中的严格下降序列构造数组')
    induce.add_argument('sigmas', help='以 ; 分隔的序列，如 "1,1;1,0;1"')
    induce.add_argument('--alpha', default='cnf', help='线序字面量或 cnf')
    induce.add_argument('--base', type=int, required=True, help='N，基集为 [0,N)')
    derive = group.add_parser('derive-tail', help='去首项得到 B/r 上的数组')
    derive.add_argument('array')
    derive.add_argument('r')
    compare = group.add_parser('compare', help='逐点比较 F 与 G')
    compare.add_argument('left')
    compare.add_argument('right')
    compare.add_argument('--ranking', default=None, help='target / discrete / suffix / 排名文档')
    minimize = group.add_parser('minimize', help='≤′-极小坏数组')
    minimize.add_argument('array')
    minimize.add_argument('--ranking', default=None)


def _add_hset(sub) -> None:
    group = sub.add_parser('hset', help='H_f(Q)').add_subparsers(dest='action', required=True)
    leq = group.add_parser('leq', help='x ≤ y')
    leq.add_argument('x')
    leq.add_argument('y')
    leq.add_argument('--ground', default='one_plus_two')
    group.add_parser('supp', help='叶子标签').add_argument('x')
    for action in ('dot', 'ddot'):
        group.add_parser(action).add_argument('n', type=int)
    verify = group.add_parser('verify-interlocked', help='检查 ṁ/n̈ 的等价关系')
    verify.add_argument('--bound', type=int, default=12)
    verify.add_argument('--ground', default='one_plus_two', help='one_plus_two 或 antichain')
    group.add_parser('antichain3', help='三元反链见证')


def _add_ordinal(sub) -> None:
    group = sub.add_parser('ordinal', help='序数记号').add_subparsers(dest='action', required=True)
    for action in ('compare', 'add'):
        parser = group.add_parser(action)
        parser.add_argument('a')
        parser.add_argument('b')
    for action in ('omega-compare', 'suffix'):
        parser = group.add_parser(action)
        parser.add_argument('sigma')
        parser.add_argument('tau')
        parser.add_argument('--alpha', default='cnf')
    head = group.add_parser('head')
    head.add_argument('sigma')
    head.add_argument('--alpha', default='cnf')


def _add_mba(sub) -> None:
    group = sub.add_parser('mba', help='[Q]^{<=n} 与坏三元组').add_subparsers(dest='action', required=True)
    for action in ('power', 'wellfounded'):
        parser = group.add_parser(action)
        parser.add_argument('ground')
        parser.add_argument('n', type=int)
    for action in ('triples', 'minimal'):
        group.add_parser(action).add_argument('ground')
    downset = group.add_parser('downset')
    downset.add_argument('ground')
    downset.add_argument('b', help='逗号分隔的标签')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='python -m src.main',
        description='BQO Workbench - 有限序论计算工具',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
  python -m src.main poset classify one_plus_two
  python -m src.main barrier chain '{base: 4, k: 1}' 0 3
  python -m src.main array max-horizon --rank 2 --target antichain:2
  python -m src.main hset verify-interlocked --bound 12
  python -m src.main ordinal omega-compare 1 1,0 --alpha chain:2
  python -m src.main mba minimal one_plus_two
""",
    )
    parser.add_argument('--config', '-c', default=None, help='配置文件路径')
    parser.add_argument('--format', choices=['yaml', 'json'], default=None, help='报告格式')
    parser.add_argument('--budget', type=int, default=None, help='搜索预算（覆盖 BQO_BUDGET）')
    parser.add_argument('--parallel', action='store_true', default=None, help='多进程拆分搜索')
    parser.add_argument('--workers', type=int, default=None, help='进程数')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v 为 INFO，-vv 为 DEBUG')
    sub = parser.add_subparsers(dest='group', required=True)
    for add in (_add_poset, _add_barrier, _add_array, _add_hset, _add_ordinal, _add_mba):
        add(sub)
    return parser


def _setup_logging(config: Config, verbose: int) -> None:
    level = {0: config.log_level, 1: 'INFO'}.get(verbose, 'DEBUG')
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )


def run(argv: Optional[List[str]] = None) -> Tuple[Report, str]:
    """
    解析参数并执行

    Returns:
        (报告, 输出格式)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return Report(' '.join(argv[:2]), STATUS_USAGE, {'error': str(e)}), 'yaml'

    config = Config(args.config)
    config.override('search.max_candidates', args.budget)
    config.override('search.parallel', args.parallel)
    config.override('search.workers', args.workers)
    config.override('output.format', args.format)
    _setup_logging(config, args.verbose)

    reporter = REPORTERS[args.group](config)
    log.debug("执行 %s %s", args.group, args.action)
    return reporter.generate(args.action, args), config.output_format


def main(argv: Optional[List[str]] = None) -> int:
    """主入口函数，返回退出码"""
    report, fmt = run(argv)
    print(report.render(fmt))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())

"""
YAML 文档读取

命令行的输入既可以是文件路径，也可以是内联的 YAML / 内置序字面量：
chain:N、antichain:N、one_plus_two、two_bar_times:N
"""

import os
import re
from typing import Any, Dict, Optional, Union

import numpy as np
import yaml

from ..arrays.fragment_array import ArrayFragment, Target, target_poset
from ..arrays.ranking import RankingRelation, SuffixRanking, discrete_ranking, target_ranking
from ..barriers.fragment import Fragment, FragmentKind, uniform_fragment
from ..errors import ParseError, SemanticError
from ..orders.poset import Poset, Preorder, SumSpec, builtin_order, sum_over_index, validate_poset, validate_preorder
from ..ordinals.layers import two_bar_times_gamma
from ..ordinals.omega import OmegaAlpha
from .parsers import parse_cnf, parse_decseq, parse_finseq, parse_term

_BUILTIN = re.compile(r'^\s*(chain|antichain|two_bar_times)\s*:\s*(\d+)\s*$|^\s*(one_plus_two)\s*$')


def load_yaml(source: str) -> Any:
    """
    读取文件或内联 YAML

    Raises:
        ParseError: YAML 语法错误，行列号取自 yaml 的 problem_mark
    """
    if os.path.isfile(source):
        with open(source, 'r', encoding='utf-8') as f:
            text = f.read()
    else:
        text = source
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        line, column = (mark.line + 1, mark.column + 1) if mark is not None else (1, 1)
        raise ParseError(f"YAML 解析失败: {getattr(e, 'problem', None) or e}", line, column) from None


def builtin_literal(text: str) -> Optional[Poset]:
    """内置序字面量，不匹配时返回 None"""
    match = _BUILTIN.match(text)
    if match is None:
        return None
    kind, n, special = match.groups()
    if special:
        return builtin_order(special)
    if kind == 'two_bar_times':
        return two_bar_times_gamma(int(n)).materialize()
    return builtin_order(kind, int(n))


def _require_mapping(doc: Any, what: str) -> Dict:
    if not isinstance(doc, dict):
        raise SemanticError(f"{what} 文档必须是映射，实际为 {type(doc).__name__}")
    return doc


def poset_from_document(doc: Any) -> Poset:
    """
    偏序文档：{elements: 个数或标签列表, pairs: [[a, b], ...], closure: bool}

    字符串按内置字面量处理
    """
    if isinstance(doc, str):
        poset = builtin_literal(doc)
        if poset is None:
            raise SemanticError(f"未知的内置序: {doc}", witness=doc)
        return poset
    doc = _require_mapping(doc, '偏序')
    return validate_poset(doc.get('elements', 0), doc.get('pairs') or [], bool(doc.get('closure', False)))


def preorder_from_document(doc: Any) -> Preorder:
    doc = _require_mapping(doc, '拟序')
    return validate_preorder(doc.get('elements', 0), doc.get('pairs') or [], bool(doc.get('closure', False)))


def parse_poset(source: str) -> Poset:
    poset = builtin_literal(source)
    if poset is not None:
        return poset
    return poset_from_document(load_yaml(source))


def target_from_document(doc: Any) -> Target:
    """
    数组目标

    - 偏序文档或内置字面量
    - {sum: {index: 偏序, summands: [偏序, ...]}} 得到和序
    - {omega: cnf} 或 {omega: 线序} 得到 ω^α
    """
    if isinstance(doc, dict) and 'sum' in doc:
        spec = _require_mapping(doc['sum'], 'sum')
        index = poset_from_document(spec.get('index'))
        summands = tuple(poset_from_document(s) for s in spec.get('summands') or [])
        try:
            return sum_over_index(SumSpec(index, summands))
        except ValueError as e:
            raise SemanticError(str(e)) from None
    if isinstance(doc, dict) and 'omega' in doc:
        alpha = doc['omega']
        return OmegaAlpha(None if alpha in (None, 'cnf') else poset_from_document(alpha))
    return poset_from_document(doc)


def parse_target(source: str) -> Target:
    poset = builtin_literal(source)
    if poset is not None:
        return poset
    return target_from_document(load_yaml(source))


def _base(raw: Any) -> range:
    if isinstance(raw, int):
        return range(raw)
    return raw or []


def fragment_from_document(doc: Any) -> Fragment:
    """
    片段文档：{base: N 或列表, members: [[...], ...], horizon: N, kind: block|barrier}

    没有 members 而给出 k 时取 [V]^k
    """
    doc = _require_mapping(doc, '片段')
    base = _base(doc.get('base'))
    if 'members' not in doc and 'k' in doc:
        return uniform_fragment(base, int(doc['k']))
    try:
        kind = FragmentKind(doc.get('kind', 'barrier'))
    except ValueError:
        raise SemanticError(f"未知的片段类型: {doc.get('kind')}", witness=doc.get('kind')) from None
    members = tuple(tuple(int(x) for x in m) for m in doc.get('members') or [])
    return Fragment(tuple(base), members, int(doc.get('horizon') or 0), kind)


def _value(target: Target, raw: Any) -> Any:
    poset = target_poset(target)
    if poset is not None:
        return poset.index_of(raw if isinstance(raw, str) else str(raw))
    cnf = target.alpha is None
    if isinstance(raw, str):
        return parse_decseq(raw, cnf=cnf)
    if cnf:
        return parse_decseq(','.join(str(e) for e in raw), cnf=True)
    return tuple(int(e) for e in raw)


def array_from_document(doc: Any, target: Optional[Target] = None) -> ArrayFragment:
    """
    数组文档：片段字段加上 values（按成员字典序）与 target

    poset 目标的值写标签；ω^α 目标的值写序列（列表或 `2,1,0`）
    """
    doc = _require_mapping(doc, '数组')
    if target is None:
        if 'target' not in doc:
            raise SemanticError("数组文档缺少 target")
        target = target_from_document(doc['target'])
    domain = fragment_from_document(doc.get('domain', doc))
    values = tuple(_value(target, v) for v in doc.get('values') or [])
    return ArrayFragment(domain, values, target)


def parse_array(source: str, target: Optional[Target] = None) -> ArrayFragment:
    return array_from_document(load_yaml(source), target)


def ranking_from_document(doc: Any, target: Target) -> Union[RankingRelation, SuffixRanking]:
    """
    部分排名：target（≤′ = ≤_Q）、discrete、suffix，或 {pairs: [[a, b], ...]}
    """
    if doc in (None, 'target'):
        poset = target_poset(target)
        return SuffixRanking() if poset is None else target_ranking(poset)
    if doc == 'suffix':
        return SuffixRanking()
    poset = target_poset(target)
    if poset is None:
        raise SemanticError("ω^α 目标只支持 suffix 排名")
    if doc == 'discrete':
        return discrete_ranking(poset)
    doc = _require_mapping(doc, '排名')
    le = np.eye(poset.size, dtype=bool)
    for a, b in doc.get('pairs') or []:
        le[poset.index_of(str(a)), poset.index_of(str(b))] = True
    return RankingRelation(poset, le)


def parse_ranking(source: Optional[str], target: Target) -> Union[RankingRelation, SuffixRanking]:
    if source is None or source in ('target', 'suffix', 'discrete'):
        return ranking_from_document(source, target)
    return ranking_from_document(load_yaml(source), target)


_READERS = {
    'poset': parse_poset,
    'preorder': lambda source: preorder_from_document(load_yaml(source)),
    'target': parse_target,
    'fragment': lambda source: fragment_from_document(load_yaml(source)),
    'array': parse_array,
    'term': parse_term,
    'cnf': parse_cnf,
    'decseq': parse_decseq,
    'finseq': parse_finseq,
}


def parse_input(source: str, kind: str) -> Any:
    """
    按类型读取一个输入（文件路径、内联 YAML 或文本格式）

    Raises:
        ValueError: 未知的类型
        ParseError / SemanticError
    """
    reader = _READERS.get(kind)
    if reader is None:
        raise ValueError(f"未知的输入类型: {kind}，可选 {', '.join(_READERS)}")
    if kind in ('term', 'cnf', 'decseq', 'finseq') and os.path.isfile(source):
        with open(source, 'r', encoding='utf-8') as f:
            source = f.read()
    return reader(source)

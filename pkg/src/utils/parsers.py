"""
文本格式解析

- H_f(Q) 项: `{* 0 {* 0}}`，原子为 Q 的标签
- CNF: `w^(w)*2 + w + 3`
- DecSeq: `2,2,0`（α 为 CNF 时条目为 CNF 文本）
- FinSeq: `0,1,2`
"""

import re
from typing import List, Optional, Tuple

from ..barriers.finseq import FinSeq, as_finseq
from ..errors import ParseError
from ..hsets.terms import HTerm, mk_leaf, mk_set
from ..orders.poset import Preorder
from ..ordinals.cnf import OrdinalCNF, cnf_sum
from ..ordinals.omega import DecSeq


def _position(text: str, offset: int) -> Tuple[int, int]:
    """offset -> (行, 列)，从 1 开始"""
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def _error(text: str, offset: int, message: str) -> ParseError:
    line, column = _position(text, offset)
    return ParseError(message, line, column)


# ---- H_f(Q) 项 ----

_TERM_TOKEN = re.compile(r'\s*(?:(\{)|(\})|([^\s{}]+))')


def parse_term(text: str, ground: Optional[Preorder] = None) -> HTerm:
    """
    解析花括号格式的项

    Args:
        text: 项的文本
        ground: 给定时检查叶子标签

    Raises:
        ParseError: 括号不匹配或多余内容
        UnknownLabel: 标签不在 ground 中
    """
    stack: List[List[HTerm]] = []
    opened: List[int] = []
    result: Optional[HTerm] = None
    pos = 0
    while pos < len(text):
        match = _TERM_TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            break
        start = match.start(match.lastindex)
        pos = match.end()
        if result is not None:
            raise _error(text, start, "项之后还有多余内容")
        if match.group(1):
            stack.append([])
            opened.append(start)
        elif match.group(2):
            if not stack:
                raise _error(text, start, "多余的 '}'")
            children = stack.pop()
            opened.pop()
            term = mk_set(children)
            if stack:
                stack[-1].append(term)
            else:
                result = term
        else:
            leaf = mk_leaf(match.group(3), ground)
            if stack:
                stack[-1].append(leaf)
            else:
                result = leaf
    if stack:
        raise _error(text, opened[-1], "'{' 没有闭合")
    if result is None:
        raise _error(text, len(text), "缺少项")
    return result


# ---- CNF ----

_CNF_TOKEN = re.compile(r'\s*(?:(\d+)|([w^*+()]))')


class _CnfParser:
    """
    expr := term ('+' term)*
    term := INT | power ('*' INT)?
    power := 'w' ('^' (INT | 'w' | '(' expr ')'))?
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == '':
                break
            match = _CNF_TOKEN.match(text, pos)
            if match is None:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise _error(text, offset, f"无法识别的字符 {text[offset]!r}")
            self.tokens.append((match.group(1) or match.group(2), match.start(match.lastindex)))
            pos = match.end()
        self.k = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.k][0] if self.k < len(self.tokens) else None

    def offset(self) -> int:
        return self.tokens[self.k][1] if self.k < len(self.tokens) else len(self.text)

    def take(self, expected: Optional[str] = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise _error(self.text, self.offset(), f"需要 {expected or '记号'}，实际 {token or '结尾'}")
        self.k += 1
        return token

    def integer(self) -> int:
        token = self.peek()
        if token is None or not token.isdigit():
            raise _error(self.text, self.offset(), f"需要整数，实际 {token or '结尾'}")
        self.k += 1
        return int(token)

    def expr(self) -> OrdinalCNF:
        terms = [self.term()]
        while self.peek() == '+':
            self.take('+')
            terms.append(self.term())
        return cnf_sum(terms)

    def term(self) -> OrdinalCNF:
        token = self.peek()
        if token is not None and token.isdigit():
            return OrdinalCNF.of(self.integer())
        self.take('w')
        exponent = OrdinalCNF.of(1)
        if self.peek() == '^':
            self.take('^')
            if self.peek() == '(':
                self.take('(')
                exponent = self.expr()
                self.take(')')
            elif self.peek() == 'w':
                self.take('w')
                exponent = OrdinalCNF.omega_power(1)
            else:
                exponent = OrdinalCNF.of(self.integer())
        coefficient = 1
        if self.peek() == '*':
            self.take('*')
            offset = self.offset()
            coefficient = self.integer()
            if coefficient < 1:
                raise _error(self.text, offset, "系数必须为正")
        if exponent.is_zero:
            return OrdinalCNF.of(coefficient)
        return OrdinalCNF.omega_power(exponent, coefficient)

    def parse(self) -> OrdinalCNF:
        value = self.expr()
        if self.peek() is not None:
            raise _error(self.text, self.offset(), f"多余的记号 {self.peek()}")
        return value


def parse_cnf(text: str) -> OrdinalCNF:
    """
    解析 CNF 文本，结果经序数加法规范化（`1 + w` 得到 `w`）

    Raises:
        ParseError
    """
    return _CnfParser(text).parse()


# ---- 序列 ----

def _split_list(text: str) -> List[Tuple[str, int]]:
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body[:1] in '(<[' and body[-1:] in ')>]' and body:
        body, offset = body[1:-1], offset + 1
    if not body.strip():
        return []
    items, start = [], 0
    for part in body.split(','):
        items.append((part.strip(), offset + start + len(part) - len(part.lstrip())))
        start += len(part) + 1
    return items


def parse_decseq(text: str, cnf: bool = False) -> DecSeq:
    """
    逗号分隔的序列，条目为整数 id，cnf=True 时为 CNF 文本

    弱递减性不在这里检查，交给 OmegaAlpha.check

    Raises:
        ParseError
    """
    entries = []
    for item, offset in _split_list(text):
        if not item:
            raise _error(text, offset, "空条目")
        if cnf:
            try:
                entries.append(parse_cnf(item))
            except ParseError as e:
                raise ParseError(e.message, e.line, offset + e.column) from None
        elif item.isdigit():
            entries.append(int(item))
        else:
            raise _error(text, offset, f"需要非负整数，实际 {item!r}")
    return tuple(entries)


def parse_finseq(text: str) -> FinSeq:
    """
    Raises:
        ParseError: 语法错误
        SemanticError: 不是严格递增
    """
    return as_finseq(parse_decseq(text))

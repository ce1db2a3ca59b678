"""
ε₀ 以下序数的 Cantor 范式记号

OrdinalCNF.terms = ((指数, 系数), ...)，指数严格递减，系数为正整数，空元组表示 0
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Tuple, Union

from ..errors import MalformedCNF

log = logging.getLogger(__name__)


class Comparison(Enum):
    LT = 'lt'
    EQ = 'eq'
    GT = 'gt'
    INCOMPARABLE = 'incomparable'

    def flip(self) -> 'Comparison':
        return {Comparison.LT: Comparison.GT, Comparison.GT: Comparison.LT}.get(self, self)

    @classmethod
    def of(cls, a, b) -> 'Comparison':
        """两个可用 < 比较的值"""
        if a < b:
            return cls.LT
        if b < a:
            return cls.GT
        return cls.EQ


@total_ordering
@dataclass(frozen=True)
class OrdinalCNF:
    terms: Tuple[Tuple['OrdinalCNF', int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple((e, int(c)) for e, c in self.terms))

    @classmethod
    def of(cls, n: int) -> 'OrdinalCNF':
        """有限序数 n"""
        if n < 0:
            raise MalformedCNF(f"序数不能为负: {n}", witness=n)
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: Union['OrdinalCNF', int], coefficient: int = 1) -> 'OrdinalCNF':
        """ω^exponent · coefficient"""
        if isinstance(exponent, int):
            exponent = cls.of(exponent)
        if coefficient < 1:
            raise MalformedCNF(f"系数必须为正: {coefficient}", witness=coefficient)
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    def __int__(self) -> int:
        if not self.is_finite:
            raise MalformedCNF(f"{self} 不是有限序数", witness=str(self))
        return sum(c for _, c in self.terms)

    def __lt__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return cnf_compare(self, other) is Comparison.LT

    def __add__(self, other):
        if isinstance(other, int):
            other = OrdinalCNF.of(other)
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return cnf_add(self, other)

    def __str__(self) -> str:
        return to_text(self)


ZERO = OrdinalCNF()
ONE = OrdinalCNF(((ZERO, 1),))
OMEGA = OrdinalCNF(((ONE, 1),))


def check_cnf(a: OrdinalCNF) -> None:
    """
    校验范式：系数为正，指数严格递减（递归）

    Raises:
        MalformedCNF
    """
    for k, (exponent, coefficient) in enumerate(a.terms):
        if not isinstance(exponent, OrdinalCNF):
            raise MalformedCNF(f"指数必须是 OrdinalCNF: {exponent!r}", witness=k)
        if coefficient < 1:
            raise MalformedCNF(f"第 {k} 项系数必须为正: {coefficient}", witness=k)
        check_cnf(exponent)
        if k and _compare(a.terms[k - 1][0], exponent) is not Comparison.GT:
            raise MalformedCNF(f"第 {k} 项指数未严格递减", witness=k)


def _compare(a: OrdinalCNF, b: OrdinalCNF) -> Comparison:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        result = _compare(ea, eb)
        if result is not Comparison.EQ:
            return result
        if ca != cb:
            return Comparison.of(ca, cb)
    return Comparison.of(len(a.terms), len(b.terms))


def cnf_compare(a: OrdinalCNF, b: OrdinalCNF) -> Comparison:
    """
    比较两个范式，逐项比较 (指数, 系数)，指数递归比较，短者为小

    Returns:
        Comparison.LT / EQ / GT

    Raises:
        MalformedCNF
    """
    check_cnf(a)
    check_cnf(b)
    return _compare(a, b)


def cnf_add(a: OrdinalCNF, b: OrdinalCNF) -> OrdinalCNF:
    """
    序数加法（不交换）

    a 中指数小于 b 首项指数的项被吸收，指数相同则系数相加
    """
    check_cnf(a)
    check_cnf(b)
    if b.is_zero:
        return a
    lead, lead_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        result = _compare(exponent, lead)
        if result is Comparison.GT:
            kept.append((exponent, coefficient))
        elif result is Comparison.EQ:
            lead_coefficient += coefficient
    return OrdinalCNF(tuple(kept) + ((lead, lead_coefficient),) + b.terms[1:])


def cnf_sum(values: Iterable[OrdinalCNF]) -> OrdinalCNF:
    total = ZERO
    for value in values:
        total = cnf_add(total, value)
    return total


def to_text(a: OrdinalCNF) -> str:
    """输出 `w^(w)*2 + w + 3` 格式"""
    if a.is_zero:
        return '0'
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            base = 'w'
        elif exponent.is_finite:
            base = f'w^{int(exponent)}'
        else:
            base = f'w^({to_text(exponent)})'
        parts.append(base if coefficient == 1 else f'{base}*{coefficient}')
    return ' + '.join(parts)

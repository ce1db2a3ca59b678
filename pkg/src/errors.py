"""
异常定义
所有领域错误都继承 BqoError，CLI 依据 exit_code 决定退出码
"""

from typing import Any, Optional


class BqoError(Exception):
    """库内所有异常的基类"""

    exit_code = 1

    def __init__(self, message: str = '', witness: Optional[Any] = None):
        super().__init__(message or self.__class__.__name__)
        self.witness = witness

    def to_dict(self) -> dict:
        return {
            'error': self.__class__.__name__,
            'message': str(self),
            'witness': self.witness,
        }


class DomainViolation(BqoError):
    """输入违反了某个领域约束（退出码 1）"""


class BudgetExhausted(BqoError):
    """搜索预算或规模上限耗尽（退出码 2）"""

    exit_code = 2


# ---- 预算类 ----

class SearchBudgetExceeded(BudgetExhausted):
    pass


class BudgetExceeded(BudgetExhausted):
    pass


class BoundExceeded(BudgetExhausted):
    pass


# ---- 偏序 ----

class MissingElement(DomainViolation):
    pass


class PosetViolation(DomainViolation):
    """关系不满足某条偏序公理，witness 为违反的二元组或三元组"""

    axiom = ''


class ReflexivityViolation(PosetViolation):
    axiom = 'reflexivity'


class AntisymmetryViolation(PosetViolation):
    axiom = 'antisymmetry'


class TransitivityViolation(PosetViolation):
    axiom = 'transitivity'


class NotWidth2Decomposable(DomainViolation):
    pass


# ---- 序列与 barrier ----

class EmptySequence(DomainViolation):
    pass


class MemberNotFound(DomainViolation):
    pass


class MissingPrefix(DomainViolation):
    pass


class NotReached(DomainViolation):
    pass


class HorizonExhausted(DomainViolation):
    pass


class IncompleteFragment(DomainViolation):
    pass


class IncompatibleBases(DomainViolation):
    pass


# ---- 数组 ----

class NotASumTarget(DomainViolation):
    pass


class NotBad(DomainViolation):
    pass


class NotDescending(DomainViolation):
    pass


class NotStabilized(DomainViolation):
    pass


class EmptyValueSequence(DomainViolation):
    pass


# ---- 项与序数 ----

class UnknownLabel(DomainViolation):
    pass


class MalformedCNF(DomainViolation):
    pass


class NotDecreasing(DomainViolation):
    pass


class NonLinearBase(DomainViolation):
    pass


# ---- 后置条件 ----

class PostconditionViolation(DomainViolation):
    """构造结果不满足应有的性质，witness 为反例"""


# ---- 输入解析 ----

class SemanticError(DomainViolation):
    pass


class EntryOutOfRange(SemanticError):
    """序列条目不是 α 的元素 id"""


class ParseError(DomainViolation):
    """文本解析失败，携带行列号（均从 1 开始）"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (行 {line}, 列 {column})", witness={'line': line, 'column': column})
        self.message = message
        self.line = line
        self.column = column

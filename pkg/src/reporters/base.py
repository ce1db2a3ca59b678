"""
报告生成器基类
"""

import json
import logging
import time
from abc import ABC, abstractmethod
from argparse import Namespace
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import yaml

from ..config import Config
from ..errors import BqoError, BudgetExhausted

log = logging.getLogger(__name__)

SCHEMA = 'bqo-report/1'

STATUS_OK = 'ok'
STATUS_VIOLATION = 'violation'
STATUS_BUDGET = 'budget_exceeded'
STATUS_USAGE = 'usage_error'

EXIT_CODES = {
    STATUS_OK: 0,
    STATUS_VIOLATION: 1,
    STATUS_BUDGET: 2,
    STATUS_USAGE: 64,
}


@dataclass
class Outcome:
    """单个动作的返回：结果、见证，以及结果本身是否表示违反"""
    result: Any
    witnesses: List[Any] = field(default_factory=list)
    ok: bool = True


@dataclass
class Report:
    """
    结构化报告

    result 只依赖输入，timing 单独存放，便于逐字节比较结果
    """
    command: str
    status: str = STATUS_OK
    result: Any = None
    witnesses: List[Any] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict)
    schema: str = SCHEMA

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict:
        return {
            'schema': self.schema,
            'command': self.command,
            'status': self.status,
            'result': plain(self.result),
            'witnesses': plain(self.witnesses),
            'timing': self.timing,
        }

    def render(self, fmt: str = 'yaml') -> str:
        if fmt == 'json':
            return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)
        return yaml.safe_dump(self.to_dict(), sort_keys=False, allow_unicode=True)


def plain(value: Any) -> Any:
    """转成 YAML/JSON 可直接输出的结构：元组变列表，枚举取值，其他对象取字符串"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k) if not isinstance(k, (int, str)) else k: plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, 'to_dict'):
        return plain(value.to_dict())
    if hasattr(value, 'item'):
        return value.item()
    return str(value)


Action = Callable[[Namespace], Outcome]


class BaseReporter(ABC):
    """
    报告生成器基类

    每个命令组一个子类，actions() 给出 动作名 -> 处理函数
    """

    group = ''

    def __init__(self, config: Config):
        """
        Args:
            config: 配置对象
        """
        self.config = config

    @abstractmethod
    def actions(self) -> Dict[str, Action]:
        """动作表"""

    @property
    def budget(self) -> int:
        return self.config.max_candidates

    @property
    def workers(self) -> int:
        """未开启并行时为 1"""
        return self.config.workers if self.config.parallel else 1

    def generate(self, action: str, args: Namespace) -> Report:
        """
        执行动作并生成报告

        库抛出的 DomainViolation / BudgetExhausted 转为对应状态，不向外传播
        """
        command = f"{self.group} {action}"
        handler: Optional[Action] = self.actions().get(action)
        if handler is None:
            return Report(command, STATUS_USAGE, {'error': f"未知的动作: {action}"})
        start = time.perf_counter()
        try:
            outcome = handler(args)
            report = Report(command, STATUS_OK if outcome.ok else STATUS_VIOLATION,
                            outcome.result, outcome.witnesses)
        except BudgetExhausted as e:
            log.warning("%s: %s", command, e)
            report = Report(command, STATUS_BUDGET, e.to_dict())
        except BqoError as e:
            log.info("%s: %s", command, e)
            report = Report(command, STATUS_VIOLATION, e.to_dict())
        except ValueError as e:
            # 参数取值不合法（如 n < 1），按用法错误处理
            report = Report(command, STATUS_USAGE, {'error': str(e)})
        report.timing = {'seconds': round(time.perf_counter() - start, 6)}
        return report

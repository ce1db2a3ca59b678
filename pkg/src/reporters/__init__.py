"""
报告生成器模块：每个命令组一个
"""

from .base import BaseReporter, Outcome, Report
from .poset import PosetReporter
from .barrier import BarrierReporter
from .array import ArrayReporter
from .hset import HsetReporter
from .ordinal import OrdinalReporter
from .mba import MbaReporter

REPORTERS = {
    reporter.group: reporter
    for reporter in (PosetReporter, BarrierReporter, ArrayReporter, HsetReporter, OrdinalReporter, MbaReporter)
}

__all__ = [
    'BaseReporter',
    'Outcome',
    'Report',
    'PosetReporter',
    'BarrierReporter',
    'ArrayReporter',
    'HsetReporter',
    'OrdinalReporter',
    'MbaReporter',
    'REPORTERS',
]

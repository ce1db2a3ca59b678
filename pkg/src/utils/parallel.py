"""
多进程拆分搜索
各分支按给定顺序排列，合并时取第一个有结果的分支，保证与串行结果一致
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence, TypeVar

log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def least_witness(task: Callable[[T], Optional[R]], branches: Sequence[T], workers: int) -> Optional[R]:
    """
    并行执行 task(branch)，返回顺序最靠前的非 None 结果

    Args:
        task: 可 pickle 的函数
        branches: 按字典序排好的分支
        workers: 进程数

    Returns:
        最小分支的结果；全部为 None 时返回 None
    """
    if not branches:
        return None
    with ProcessPoolExecutor(max_workers=min(workers, len(branches))) as pool:
        futures = [pool.submit(task, branch) for branch in branches]
        for k, future in enumerate(futures):
            result = future.result()
            if result is not None:
                for rest in futures[k + 1:]:
                    rest.cancel()
                log.debug("并行搜索: 分支 %d/%d 命中", k + 1, len(branches))
                return result
    return None

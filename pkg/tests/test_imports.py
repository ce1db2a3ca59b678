import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


@pytest.mark.parametrize('module', [
    'src.main',
    'src.orders',
    'src.ordinals',
    'src.ordinals.cnf',
    'src.hsets',
    'src.arrays',
    'src.barriers',
    'src.mba',
    'src.utils.documents',
    'src.utils.parsers',
])
def test_fresh_interpreter_imports(module):
    """每个包都能在新进程里作为第一个模块导入"""
    result = subprocess.run([sys.executable, '-c', f'import {module}'],
                            cwd=ROOT, capture_output=True, text=True)
    assert result.returncode == 0, result.stderr

import pytest

from src.config import ENV_MAPPING


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """测试不受外部 BQO_* 环境变量影响"""
    for name in list(ENV_MAPPING) + ['BQO_CONFIG']:
        monkeypatch.delenv(name, raising=False)

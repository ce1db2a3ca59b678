"""
配置管理模块
支持从 YAML 文件和环境变量加载配置
"""

import copy
import os
import re
from typing import Any, Dict, Optional

import yaml


# 默认配置
DEFAULT_CONFIG = {
    'project': {
        'name': 'BQO Workbench',
    },
    'search': {
        'max_candidates': 10_000_000,  # 穷举搜索上限 |Q|^|P|
        'parallel': False,
        'workers': 0,                  # 0 表示使用 CPU 核数
    },
    'hset': {
        'max_index': 64,               # dot(n)/ddot(n) 的 n 上限
    },
    'barrier': {
        'max_members': 4096,
    },
    'mba': {
        'max_carrier': 4096,           # [Q]^{<=n} 子集数上限
    },
    'output': {
        'format': 'yaml',              # yaml, json
    },
    'logging': {
        'level': 'WARNING',
    },
}


# 环境变量映射
ENV_MAPPING = {
    'BQO_BUDGET': 'search.max_candidates',
    'BQO_PARALLEL': 'search.parallel',
    'BQO_WORKERS': 'search.workers',
    'BQO_HSET_MAX_INDEX': 'hset.max_index',
    'BQO_BARRIER_MAX_MEMBERS': 'barrier.max_members',
    'BQO_MBA_MAX_CARRIER': 'mba.max_carrier',
    'BQO_OUTPUT_FORMAT': 'output.format',
    'BQO_LOG_LEVEL': 'logging.level',
    'BQO_PROJECT_NAME': 'project.name',
}


def _deep_merge(base: Dict, override: Dict) -> Dict:
    """深度合并，override 优先"""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _coerce(current: Any, raw: str) -> Any:
    """按默认值的类型转换环境变量字符串，转换失败时保留默认值"""
    if isinstance(current, bool):
        return raw.strip().lower() in ('true', '1', 'yes', 'on')
    if isinstance(current, int):
        try:
            return int(raw.replace('_', ''))
        except ValueError:
            return current
    return raw


def _set_nested_value(config: Dict, path: str, raw: str) -> None:
    """按点分路径写入嵌套字典"""
    *parents, leaf = path.split('.')
    node = config
    for key in parents:
        node = node.setdefault(key, {})
    node[leaf] = _coerce(node.get(leaf), raw)


def _get_nested_value(config: Dict, path: str, default: Any = None) -> Any:
    node = config
    for key in path.split('.'):
        if not isinstance(node, dict) or key not in node:
            return default
        node = node[key]
    return node


_ENV_REF = re.compile(r'\$\{([^}:]+)(?::-([^}]*))?\}')


def _expand_env_vars(value: Any) -> Any:
    """展开 ${VAR} 或 ${VAR:-default}，支持嵌套的字典和列表"""
    if isinstance(value, str):
        return _ENV_REF.sub(lambda m: os.environ.get(m.group(1), m.group(2) or ''), value)
    if isinstance(value, dict):
        return {k: _expand_env_vars(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_expand_env_vars(v) for v in value]
    return value


def load_config(config_path: Optional[str] = None, use_env: bool = True) -> Dict:
    """
    加载配置

    优先级（从低到高）:
    1. 默认配置
    2. YAML 配置文件
    3. 环境变量

    Args:
        config_path: 配置文件路径，缺省时读取 BQO_CONFIG
        use_env: 是否应用环境变量覆盖

    Returns:
        合并后的配置字典
    """
    config = copy.deepcopy(DEFAULT_CONFIG)

    if config_path is None:
        config_path = os.environ.get('BQO_CONFIG', '')

    if config_path and os.path.exists(config_path):
        with open(config_path, 'r', encoding='utf-8') as f:
            file_config = yaml.safe_load(f) or {}
        config = _deep_merge(config, _expand_env_vars(file_config))

    if use_env:
        for env_var, key_path in ENV_MAPPING.items():
            raw = os.environ.get(env_var)
            if raw is not None:
                _set_nested_value(config, key_path, raw)

    return config


class Config:
    """配置管理类"""

    def __init__(self, config_path: Optional[str] = None, use_env: bool = True):
        self._config = load_config(config_path, use_env)

    def get(self, path: str, default: Any = None) -> Any:
        return _get_nested_value(self._config, path, default)

    def __getitem__(self, key: str) -> Any:
        return self._config[key]

    def __contains__(self, key: str) -> bool:
        return key in self._config

    @property
    def project_name(self) -> str:
        return self.get('project.name', 'BQO Workbench')

    @property
    def max_candidates(self) -> int:
        return int(self.get('search.max_candidates', 10_000_000))

    @property
    def parallel(self) -> bool:
        return bool(self.get('search.parallel', False))

    @property
    def workers(self) -> int:
        return int(self.get('search.workers', 0)) or (os.cpu_count() or 1)

    @property
    def hset_max_index(self) -> int:
        return int(self.get('hset.max_index', 64))

    @property
    def barrier_max_members(self) -> int:
        return int(self.get('barrier.max_members', 4096))

    @property
    def mba_max_carrier(self) -> int:
        return int(self.get('mba.max_carrier', 4096))

    @property
    def output_format(self) -> str:
        return str(self.get('output.format', 'yaml')).lower()

    @property
    def log_level(self) -> str:
        return str(self.get('logging.level', 'WARNING')).upper()

    def override(self, path: str, value: Any) -> None:
        """命令行参数覆盖（优先级最高）"""
        if value is None:
            return
        *parents, leaf = path.split('.')
        node = self._config
        for key in parents:
            node = node.setdefault(key, {})
        node[leaf] = value

    def to_dict(self) -> Dict:
        return copy.deepcopy(self._config)

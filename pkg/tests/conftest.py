"""
测试公共夹具
"""
import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.core import config as config_module
from src.services import load_corpus_path

CORPUS_DIR = PROJECT_ROOT / "data" / "corpus"


@pytest.fixture(autouse=True)
def project_cwd(monkeypatch):
    """语料索引中的路径相对于项目根目录"""
    monkeypatch.chdir(PROJECT_ROOT)
    yield


@pytest.fixture(autouse=True)
def restore_settings():
    """命令行会覆盖全局配置，测试之间恢复"""
    saved = config_module._settings
    yield
    config_module._settings = saved


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def load():
    """按文件名加载内置语料"""
    def _load(filename: str):
        return load_corpus_path(CORPUS_DIR / filename)
    return _load


@pytest.fixture
def b2(load):
    return load("b2.json").semigroup


@pytest.fixture
def s3(load):
    return load("s3.json").semigroup


@pytest.fixture
def sim2(load):
    return load("sim2.json").semigroup


@pytest.fixture
def z2_times_two(load):
    return load("z2_times_two.json").semigroup

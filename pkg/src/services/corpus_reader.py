"""
语料读取器
从 YAML 索引读取内置语料列表，并把 JSON 语料文件解析为逆半群
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import yaml
from pydantic import ValidationError

from ..core import get_logger, get_settings, ConfigurationError, ParseError, UnknownCongruenceError
from ..algebra.semigroup import FiniteInverseSemigroup, PartialBijection, validate, generate_from_partial_bijections
from ..models import CorpusFile, CorpusKind

logger = get_logger()


@dataclass
class LoadedCorpus:
    """解析后的语料；presented 类型没有有限半群"""
    spec: CorpusFile
    semigroup: Optional[FiniteInverseSemigroup] = None
    path: Optional[Path] = None

    @property
    def name(self) -> str:
        return self.spec.name


class CorpusEntryConfig:
    """语料索引中的一项"""

    def __init__(self, name: str, file: str, description: str = "", enabled: bool = True):
        self.name = name
        self.file = file
        self.description = description
        self.enabled = enabled

    def load(self, base_path: Path) -> LoadedCorpus:
        return load_corpus_path(base_path / self.file)


class CorpusReader:
    """YAML 语料索引读取器"""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = Path(config_file or get_settings().corpus_config_file)
        self.entries: List[CorpusEntryConfig] = []
        self._load_config()

    def _load_config(self):
        """加载 YAML 索引文件"""
        if not self.config_file.exists():
            logger.error(f"语料索引文件不存在: {self.config_file}")
            raise ConfigurationError(
                f"语料索引文件不存在: {self.config_file}",
                details={"file": str(self.config_file)}
            )

        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            logger.error(f"加载语料索引失败 {self.config_file}: {e}")
            raise ConfigurationError(f"语料索引不是合法的 YAML: {e}", details={"file": str(self.config_file)})

        self.entries = [
            CorpusEntryConfig(
                name=item.get('name', ''),
                file=item.get('file', ''),
                description=item.get('description', ''),
                enabled=item.get('enabled', True)
            )
            for item in config.get('corpus', [])
        ]
        logger.info(f"成功加载语料索引: {len(self.entries)} 个语料")

    @property
    def base_path(self) -> Path:
        return self.config_file.parent.parent

    def get_enabled_entries(self) -> List[CorpusEntryConfig]:
        return [entry for entry in self.entries if entry.enabled]

    def get_entry_by_name(self, name: str) -> Optional[CorpusEntryConfig]:
        for entry in self.entries:
            if entry.name == name:
                return entry
        return None

    def load_all(self) -> List[LoadedCorpus]:
        """按索引顺序加载全部启用的语料"""
        return [entry.load(self.base_path) for entry in self.get_enabled_entries()]


def parse_corpus_text(text: str, source: str = "<memory>") -> CorpusFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"{source}: JSON 解析失败: {e.msg}",
            details={"file": source, "line": e.lineno, "column": e.colno}
        )
    return parse_corpus_data(raw, source)


def parse_corpus_data(raw, source: str = "<memory>") -> CorpusFile:
    try:
        return CorpusFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(x) for x in first.get("loc", ())) or None
        raise ParseError(
            f"{source}: 字段校验失败: {first.get('msg')}",
            details={"file": source, "field": field}
        )
    except ValueError as e:
        raise ParseError(f"{source}: {e}", details={"file": source})


def build_semigroup(spec: CorpusFile) -> Optional[FiniteInverseSemigroup]:
    """把语料载荷构造为逆半群（presented 类型返回 None）"""
    if spec.kind == CorpusKind.TABLE:
        return validate(spec.table, spec.inverse, spec.elements, spec.name)

    if spec.kind == CorpusKind.PARTIAL_BIJECTIONS:
        try:
            generators = [PartialBijection(tuple(g)) for g in spec.generators]
        except ValueError as e:
            raise ParseError(f"{spec.name}: 生成元非法: {e}", details={"field": "generators"})
        return generate_from_partial_bijections(generators, name=spec.name)

    return None


def load_corpus(spec: CorpusFile, path: Optional[Path] = None) -> LoadedCorpus:
    return LoadedCorpus(spec=spec, semigroup=build_semigroup(spec), path=path)


def load_corpus_path(path: Union[str, Path]) -> LoadedCorpus:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"语料文件不存在: {path}", details={"file": str(path)})
    spec = parse_corpus_text(path.read_text(encoding="utf-8"), str(path))
    logger.debug(f"成功加载语料文件: {path}", extra={"semigroup": spec.name})
    return load_corpus(spec, path)


def collect_corpus(path: Union[str, Path]) -> List[LoadedCorpus]:
    """单个文件，或目录下按文件名排序的全部 *.json"""
    path = Path(path)
    if path.is_dir():
        return [load_corpus_path(p) for p in sorted(path.glob("*.json"))]
    return [load_corpus_path(path)]


def resolve_pairs(S: FiniteInverseSemigroup, spec: CorpusFile, name: str) -> List[Tuple[int, int]]:
    """命名生成对 → 元素 id 对"""
    if name not in spec.congruences:
        raise UnknownCongruenceError(
            f"{spec.name} 中没有名为 {name!r} 的同余",
            details={"semigroup": spec.name, "name": name, "known": sorted(spec.congruences)}
        )
    pairs = []
    for left, right in spec.congruences[name]:
        try:
            pairs.append((S.id_of(left), S.id_of(right)))
        except KeyError as e:
            raise ParseError(
                f"{spec.name}: 同余 {name!r} 引用了不存在的元素 {e.args[0]!r}",
                details={"field": f"congruences.{name}", "element": e.args[0]}
            )
    return pairs

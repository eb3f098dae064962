"""
通用数据模型
"""
from enum import Enum
from typing import Optional
from pydantic import BaseModel


class OutputFormat(str, Enum):
    """输出格式"""
    TEXT = "text"
    JSON = "json"


class CorpusKind(str, Enum):
    """语料类型"""
    TABLE = "table"
    PARTIAL_BIJECTIONS = "partial_bijections"
    PRESENTED = "presented"


class PresentedFamily(str, Enum):
    """以范式表示的无限半群族"""
    FCIS = "fcis"
    CUNTZ = "cuntz"


class Verdict(str, Enum):
    """定理校验结论"""
    VERIFIED = "verified"
    REFUTED = "refuted"
    BUDGET_EXCEEDED = "budget_exceeded"


class TheoremTag(str, Enum):
    """定理标签（与命令行 --theorem 取值一致）"""
    MAIN = "main"
    MIN_RESTRICTION = "min-restriction"
    CLIFFORD = "clifford"
    ABELIANIZATION = "abelianization"
    CLIFFORD_STRUCTURE = "clifford-structure"
    FIXED_POINTS = "fixed-points"
    CORRESPONDENCE = "correspondence"
    FCIS = "fcis"
    CUNTZ = "cuntz"


class BaseResponse(BaseModel):
    """基础响应模型"""
    success: bool = True
    message: str = "操作成功"
    timestamp: Optional[str] = None

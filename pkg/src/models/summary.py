"""
计算结果数据模型
"""
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, Field

from .common import BaseResponse, CorpusKind


class SemigroupTable(BaseModel):
    """乘法表的 JSON 形式"""
    name: str = Field(..., description="名称")
    elements: List[str] = Field(..., description="元素名")
    table: List[List[int]] = Field(..., description="乘法表")
    inverse: List[int] = Field(..., description="逆元表")


class SemigroupSummary(BaseModel):
    """inspect 的输出"""
    name: str = Field(..., description="名称")
    kind: CorpusKind = Field(..., description="语料类型")
    order: Optional[int] = Field(default=None, description="阶，无限时为空")
    idempotent_count: Optional[int] = Field(default=None, description="幂等元个数")
    is_clifford: Optional[bool] = Field(default=None, description="是否为 Clifford 逆半群")
    zero: Optional[str] = Field(default=None, description="零元")
    one: Optional[str] = Field(default=None, description="单位元")
    character_count: Optional[int] = Field(default=None, description="特征个数")
    fixed_character_count: Optional[int] = Field(default=None, description="不动特征个数")
    hom_to_two_count: int = Field(..., ge=0, description="到 {0,1} 的非零同态个数")
    characters: List[str] = Field(default=[], description="特征（以基点幂等元表示）")
    fixed_characters: List[str] = Field(default=[], description="不动特征")


class CongruenceSummary(BaseModel):
    """congruence 的输出"""
    semigroup: str = Field(..., description="半群名称")
    which: str = Field(..., description="同余种类")
    classes: List[List[str]] = Field(..., description="同余类（按元素名）")
    quotient_order: int = Field(..., ge=1, description="商半群的阶")
    quotient_is_clifford: bool = Field(..., description="商是否为 Clifford 的")
    quotient_is_commutative: bool = Field(..., description="商是否交换")
    quotient: Optional[SemigroupTable] = Field(default=None, description="商半群乘法表（--emit-quotient）")


class ArrowItem(BaseModel):
    """群胚箭头"""
    id: int = Field(..., ge=0, description="箭头 id")
    label: str = Field(..., description="展示名")
    is_unit: bool = Field(..., description="是否为单位")
    source: int = Field(..., ge=0, description="源单位")
    range: int = Field(..., ge=0, description="靶单位")
    inverse: int = Field(..., ge=0, description="逆箭头")


class GroupoidDump(BaseModel):
    """群胚的 JSON 形式：复合表以 (α, β, αβ) 稀疏三元组给出"""
    name: str = Field(..., description="名称")
    arrows: List[ArrowItem] = Field(..., description="箭头")
    compositions: List[Tuple[int, int, int]] = Field(default=[], description="复合三元组")
    summary: Dict[str, Any] = Field(default={}, description="箭头数、单位数、轨道、不动点等")


class HealthResponse(BaseResponse):
    """健康检查响应模型"""
    status: str = Field(..., description="服务状态")
    version: str = Field(..., description="服务版本")
    uptime_seconds: int = Field(..., ge=0, description="运行时长（秒）")
    components: Dict[str, Any] = Field(default={}, description="各组件状态")

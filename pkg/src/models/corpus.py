"""
语料文件数据模型
"""
from typing import Dict, List, Optional, Tuple
from pydantic import BaseModel, Field

from .common import CorpusKind, PresentedFamily


class PresentedSpec(BaseModel):
    """以范式表示的半群"""
    family: PresentedFamily = Field(..., description="半群族")
    alphabet: List[str] = Field(default=[], description="FCIS 的生成字母")
    n: Optional[int] = Field(default=None, ge=1, description="Cuntz 半群的生成元个数")

    def model_post_init(self, __context):
        if self.family == PresentedFamily.FCIS and not self.alphabet:
            raise ValueError("fcis 需要非空的 alphabet")
        if self.family == PresentedFamily.CUNTZ and (self.n is None or self.n < 2):
            raise ValueError("cuntz 需要给出 n ≥ 2")


class CorpusFile(BaseModel):
    """语料文件（JSON）"""
    name: str = Field(..., min_length=1, description="半群名称")
    kind: CorpusKind = Field(..., description="语料类型")
    description: Optional[str] = Field(default=None, description="说明")
    elements: Optional[List[str]] = Field(default=None, description="元素名，按 id 排列")
    table: Optional[List[List[int]]] = Field(default=None, description="乘法表")
    inverse: Optional[List[int]] = Field(default=None, description="逆元表，缺省时自动求出")
    degree: Optional[int] = Field(default=None, ge=0, description="部分双射的次数")
    generators: Optional[List[List[int]]] = Field(default=None, description="部分双射生成元，-1 表示无定义")
    presented: Optional[PresentedSpec] = Field(default=None, description="范式表示")
    congruences: Dict[str, List[Tuple[str, str]]] = Field(default={}, description="命名的生成对")

    def model_post_init(self, __context):
        """按 kind 检查载荷字段"""
        if self.kind == CorpusKind.TABLE and self.table is None:
            raise ValueError("table 类型必须提供 table 字段")
        if self.kind == CorpusKind.PARTIAL_BIJECTIONS:
            if not self.generators:
                raise ValueError("partial_bijections 类型必须提供 generators 字段")
            if self.degree is not None and any(len(g) != self.degree for g in self.generators):
                raise ValueError("生成元长度与 degree 不一致")
        if self.kind == CorpusKind.PRESENTED and self.presented is None:
            raise ValueError("presented 类型必须提供 presented 字段")

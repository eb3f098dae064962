"""
定理校验报告数据模型
"""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from .common import BaseResponse, TheoremTag, Verdict
from .corpus import CorpusFile


class InstanceDescriptor(BaseModel):
    """校验实例：半群及所用的同余或特征集"""
    semigroup: str = Field(..., description="半群名称")
    congruence: Optional[str] = Field(default=None, description="同余说明")
    parameters: Dict[str, Any] = Field(default={}, description="其他参数")


class TheoremReport(BaseModel):
    """单个定理实例的校验报告"""
    theorem: TheoremTag = Field(..., description="定理标签")
    instance: InstanceDescriptor = Field(..., description="实例")
    verdict: Verdict = Field(..., description="结论")
    certificate: Optional[Dict[str, Any]] = Field(default=None, description="可重放的证书")
    refutation: Optional[str] = Field(default=None, description="反驳理由")
    details: Dict[str, Any] = Field(default={}, description="中间恒等式等细节")
    wall_time_ms: int = Field(..., ge=0, description="耗时（毫秒）")

    def model_post_init(self, __context):
        if self.verdict == Verdict.VERIFIED and self.certificate is None:
            raise ValueError("verified 结论必须附带证书")


class CongruenceRequest(BaseModel):
    """同余计算请求"""
    corpus: CorpusFile = Field(..., description="语料")
    which: str = Field(..., description="least-clifford | least-abelian | max-group | from-pairs <name>")
    emit_quotient: bool = Field(default=False, description="是否返回商半群乘法表")


class VerifyRequest(BaseModel):
    """定理校验请求"""
    corpus: CorpusFile = Field(..., description="语料")
    theorems: List[TheoremTag] = Field(default=[], description="要校验的定理，空列表表示全部")
    budget: Optional[int] = Field(default=None, ge=1, description="同构搜索节点上限")


class VerifyResponse(BaseResponse):
    """定理校验响应"""
    all_verified: bool = Field(..., description="是否全部通过")
    reports: List[TheoremReport] = Field(default=[], description="报告列表")

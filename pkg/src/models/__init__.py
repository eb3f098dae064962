"""
数据模型包导出
"""
from .common import (
    OutputFormat, CorpusKind, PresentedFamily, Verdict, TheoremTag, BaseResponse
)
from .corpus import PresentedSpec, CorpusFile
from .summary import (
    SemigroupTable, SemigroupSummary, CongruenceSummary,
    ArrowItem, GroupoidDump, HealthResponse
)
from .report import (
    InstanceDescriptor, TheoremReport, CongruenceRequest,
    VerifyRequest, VerifyResponse
)

__all__ = [
    # Common models
    "OutputFormat", "CorpusKind", "PresentedFamily", "Verdict", "TheoremTag", "BaseResponse",

    # Corpus models
    "PresentedSpec", "CorpusFile",

    # Summary models
    "SemigroupTable", "SemigroupSummary", "CongruenceSummary",
    "ArrowItem", "GroupoidDump", "HealthResponse",

    # Report models
    "InstanceDescriptor", "TheoremReport", "CongruenceRequest",
    "VerifyRequest", "VerifyResponse"
]

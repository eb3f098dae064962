"""
半群计算API路由
"""
from fastapi import APIRouter, Depends
from fastapi.concurrency import run_in_threadpool

from ...models import (
    CorpusFile, SemigroupSummary, CongruenceRequest, CongruenceSummary,
    VerifyRequest, VerifyResponse
)
from ...services import AlgebraService
from ...core import get_logger
from ..dependencies import get_algebra_service

logger = get_logger()
router = APIRouter(prefix="/semigroups", tags=["半群计算"])


@router.post(
    "/inspect",
    response_model=SemigroupSummary,
    summary="半群概要",
    description="阶、幂等元、特征、不动特征与到 {0,1} 的同态个数"
)
async def inspect_semigroup(
    corpus: CorpusFile,
    service: AlgebraService = Depends(get_algebra_service)
) -> SemigroupSummary:
    logger.info(f"收到 inspect 请求: {corpus.name}", extra={"semigroup": corpus.name})
    entry = await run_in_threadpool(service.load, corpus)
    return await run_in_threadpool(service.inspect, entry)


@router.post(
    "/congruence",
    response_model=CongruenceSummary,
    summary="同余与商",
    description="least-clifford | least-abelian | max-group | from-pairs:<name>"
)
async def compute_congruence(
    request: CongruenceRequest,
    service: AlgebraService = Depends(get_algebra_service)
) -> CongruenceSummary:
    logger.info(
        f"收到 congruence 请求: {request.corpus.name}",
        extra={"semigroup": request.corpus.name, "which": request.which}
    )
    entry = await run_in_threadpool(service.load, request.corpus)
    return await run_in_threadpool(service.congruence, entry, request.which, request.emit_quotient)


@router.post(
    "/verify",
    response_model=VerifyResponse,
    summary="定理校验",
    description="在单个语料上校验所选同构定理，返回带证书的报告"
)
async def verify_theorems(
    request: VerifyRequest,
    service: AlgebraService = Depends(get_algebra_service)
) -> VerifyResponse:
    """
    定理校验接口

    Args:
        request: 语料、定理列表与搜索上限
        service: 代数计算服务

    Returns:
        全部报告；all_verified 为真当且仅当每个结论都是 verified
    """
    logger.info(f"收到 verify 请求: {request.corpus.name}", extra={"semigroup": request.corpus.name})
    entry = await run_in_threadpool(service.load, request.corpus)
    all_verified, reports = await run_in_threadpool(
        service.verify, [entry], request.theorems or None, request.budget
    )
    return VerifyResponse(
        all_verified=all_verified,
        reports=reports,
        message="全部通过" if all_verified else "存在未通过的定理"
    )

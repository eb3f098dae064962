"""
FastAPI依赖注入
"""
from functools import lru_cache

from ..services import AlgebraService
from ..core import get_settings


@lru_cache()
def get_algebra_service() -> AlgebraService:
    """获取代数计算服务实例（单例）"""
    return AlgebraService()


@lru_cache()
def get_app_settings():
    """获取应用配置（单例）"""
    return get_settings()

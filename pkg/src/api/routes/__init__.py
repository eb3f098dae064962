"""
API路由包导出
"""
from .semigroups import router as semigroups_router
from .health import router as health_router

__all__ = ["semigroups_router", "health_router"]

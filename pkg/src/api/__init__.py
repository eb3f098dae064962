"""
API包导出
"""
from .dependencies import get_algebra_service, get_app_settings
from .routes import semigroups_router, health_router

__all__ = [
    "get_algebra_service", "get_app_settings",
    "semigroups_router", "health_router"
]

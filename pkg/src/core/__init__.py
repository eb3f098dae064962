"""
核心包导出
"""
from .config import Settings, get_settings, create_settings, override_settings
from .exceptions import (
    GfBaseException, ConfigurationError, ParseError,
    SemigroupValidationError, MalformedTableError, NonAssociativeError,
    BadInverseError, NoncommutingIdempotentsError, SizeLimitExceededError,
    NotIdempotentError, NotNormalError, OutsideDomainError,
    NotInvariantError, NotInvariantSetError, NotSubgroupoidError,
    NotInjectiveOnUnitsError, NotGroupBundleError, SearchBudgetExceededError,
    EmptySupportError, NotCliffordError, UnknownCongruenceError,
    InvariantViolationError, ensure
)
from .logging import get_logger, set_log_level

__all__ = [
    "Settings", "get_settings", "create_settings", "override_settings",
    "GfBaseException", "ConfigurationError", "ParseError",
    "SemigroupValidationError", "MalformedTableError", "NonAssociativeError",
    "BadInverseError", "NoncommutingIdempotentsError", "SizeLimitExceededError",
    "NotIdempotentError", "NotNormalError", "OutsideDomainError",
    "NotInvariantError", "NotInvariantSetError", "NotSubgroupoidError",
    "NotInjectiveOnUnitsError", "NotGroupBundleError", "SearchBudgetExceededError",
    "EmptySupportError", "NotCliffordError", "UnknownCongruenceError",
    "InvariantViolationError", "ensure",
    "get_logger", "set_log_level"
]

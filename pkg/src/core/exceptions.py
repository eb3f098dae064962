"""
自定义异常类
"""
from typing import Optional, Any, Dict


class GfBaseException(Exception):
    """基础异常类"""

    default_code = "GF_ERROR"

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code or self.default_code
        self.details = details or {}
        super().__init__(self.message)


class ConfigurationError(GfBaseException):
    """配置错误"""
    default_code = "CONFIGURATION_ERROR"


class ParseError(GfBaseException):
    """语料文件解析错误（details 中带 line / field）"""
    default_code = "PARSE_ERROR"


class SemigroupValidationError(GfBaseException):
    """逆半群公理校验失败，details 中给出见证元素"""
    default_code = "VALIDATION_ERROR"


class MalformedTableError(SemigroupValidationError):
    """乘法表形状或取值非法"""
    default_code = "MALFORMED_TABLE"


class NonAssociativeError(SemigroupValidationError):
    """结合律不成立"""
    default_code = "NON_ASSOCIATIVE"


class BadInverseError(SemigroupValidationError):
    """逆元公理不成立"""
    default_code = "BAD_INVERSE"


class NoncommutingIdempotentsError(SemigroupValidationError):
    """幂等元不交换"""
    default_code = "NONCOMMUTING_IDEMPOTENTS"


class SizeLimitExceededError(GfBaseException):
    """生成的半群超过元素上限"""
    default_code = "SIZE_LIMIT_EXCEEDED"


class NotIdempotentError(GfBaseException):
    """要求幂等元的位置传入了非幂等元"""
    default_code = "NOT_IDEMPOTENT"


class NotNormalError(GfBaseException):
    """同余或子群胚不是正规的"""
    default_code = "NOT_NORMAL"


class OutsideDomainError(GfBaseException):
    """特征不在谱作用的定义域内"""
    default_code = "OUTSIDE_DOMAIN"


class NotInvariantError(GfBaseException):
    """特征集合不是不变集"""
    default_code = "NOT_INVARIANT"


class NotInvariantSetError(GfBaseException):
    """单位集合在群胚中不是不变集"""
    default_code = "NOT_INVARIANT_SET"


class NotSubgroupoidError(GfBaseException):
    """选取的箭头集合不是子群胚"""
    default_code = "NOT_A_SUBGROUPOID"


class NotInjectiveOnUnitsError(GfBaseException):
    """群胚同态在单位空间上不单"""
    default_code = "NOT_INJECTIVE_ON_UNITS"


class NotGroupBundleError(GfBaseException):
    """群胚不是群丛"""
    default_code = "NOT_GROUP_BUNDLE"


class SearchBudgetExceededError(GfBaseException):
    """同构搜索超过节点预算"""
    default_code = "SEARCH_BUDGET_EXCEEDED"


class EmptySupportError(GfBaseException):
    """FCIS 特征的指标集为空"""
    default_code = "EMPTY_SUPPORT"


class NotCliffordError(GfBaseException):
    """半群不是 Clifford 逆半群"""
    default_code = "NOT_CLIFFORD"


class UnknownCongruenceError(GfBaseException):
    """语料文件中不存在该命名同余"""
    default_code = "UNKNOWN_CONGRUENCE"


class InvariantViolationError(GfBaseException):
    """计算结果违反了应当成立的不变量"""
    default_code = "INVARIANT_VIOLATION"


def ensure(condition: bool, message: str, **details: Any) -> None:
    """断言后置条件，失败时抛出 InvariantViolationError"""
    if not condition:
        raise InvariantViolationError(message, details=details)

"""
应用配置管理
"""
from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """应用配置"""

    model_config = SettingsConfigDict(
        env_prefix="GF_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # 应用基本信息
    app_name: str = Field(default="逆半群与泛群胚计算工具", description="应用名称")
    app_version: str = Field(default="1.0.0", description="应用版本")
    debug: bool = Field(default=False, description="调试模式")

    # 计算上限
    budget: int = Field(default=10_000_000, ge=1, description="同构搜索节点上限（GF_BUDGET）")
    size_limit: int = Field(default=100_000, ge=1, description="部分双射生成半群的元素上限")
    max_enumerated_idempotents: int = Field(default=8, ge=1, description="穷举划分/子集时 |E(S)| 的上限")
    max_bruteforce_idempotents: int = Field(default=12, ge=1, description="特征暴力枚举时 |E(S)| 的上限")
    nu_ab_max_size: int = Field(default=12, ge=1, description="ν_ab 预言机适用的 |S| 上限")
    cuntz_max_length: int = Field(default=4, ge=1, description="Cuntz 半群同态搜索的词长上限")
    fcis_max_length: int = Field(default=6, ge=1, description="FCIS 预言机扫描的词长上限")
    seed: int = Field(default=0, description="随机词采样种子")

    # 数据路径配置
    corpus_config_file: str = Field(default="config/corpus.yaml", description="内置语料索引文件")

    # 服务配置
    host: str = Field(default="127.0.0.1", description="监听地址")
    port: int = Field(default=18085, description="监听端口")
    api_prefix: str = Field(default="/api/v1", description="API前缀")
    docs_url: str = Field(default="/docs", description="文档URL")
    openapi_url: str = Field(default="/openapi.json", description="OpenAPI URL")

    # 日志配置
    log_level: str = Field(default="INFO", description="日志级别")
    log_format: str = Field(default="json", description="日志格式")
    log_file: str = Field(default="", description="日志文件路径")


# 全局配置实例（延迟初始化）
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """获取应用配置（单例模式）"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def create_settings(**kwargs) -> Settings:
    """创建新的配置实例（用于测试）"""
    return Settings(**kwargs)


def override_settings(**kwargs) -> Settings:
    """用命令行参数覆盖全局配置：命令行参数 > 环境变量 > 默认值"""
    global _settings
    overrides = {key: value for key, value in kwargs.items() if value is not None}
    _settings = get_settings().model_copy(update=overrides)
    return _settings

"""
日志配置
"""
import json
import logging
import sys
from datetime import datetime, timezone

from .config import get_settings

# LogRecord 自带的属性，其余视为 extra 字段
_RESERVED = set(logging.LogRecord("", 0, "", 0, "", (), None).__dict__) | {"message", "asctime"}


def setup_logging() -> logging.Logger:
    """设置日志配置"""
    settings = get_settings()

    logger = logging.getLogger("gf")
    logger.setLevel(getattr(logging, settings.log_level.upper(), logging.INFO))

    # 避免重复添加handler
    if logger.handlers:
        return logger

    if settings.log_format.lower() == "json":
        formatter: logging.Formatter = JsonFormatter()
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    # 标准输出留给命令结果，日志写 stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if settings.log_file:
        file_handler = logging.FileHandler(settings.log_file, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


class JsonFormatter(logging.Formatter):
    """JSON格式的日志格式化器"""

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }

        # 添加额外的字段（semigroup、theorem、request_id 等）
        for key, value in record.__dict__.items():
            if key not in _RESERVED and not key.startswith("_"):
                log_entry[key] = value

        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_entry, ensure_ascii=False, default=str)


def set_log_level(level: str) -> None:
    """运行时调整日志级别（命令行 --log-level）"""
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))


# 全局logger实例
logger = setup_logging()


def get_logger() -> logging.Logger:
    """获取全局logger"""
    return logger

"""
Настройка логирования для CLI и библиотеки.
- Все сообщения → stderr (stdout остаётся чистым для --json)
- DEBUG включается флагом --verbose
"""
import logging
import sys
from typing import Optional

from src.config.settings import get_settings

ROOT_LOGGER_NAME = "src"

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Настраивает корневой логгер пакета.

    Args:
        level: Имя уровня (DEBUG, INFO, ...). По умолчанию из настроек.

    Returns:
        Настроенный логгер пакета
    """
    if level is None:
        level = get_settings().log_level

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(getattr(logging, level.upper(), logging.WARNING))

    # Проверяем, что handler еще не добавлен
    if not logger.handlers:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(console_handler)

    for handler in logger.handlers:
        handler.setLevel(logger.level)

    return logger

import logging

from core.config import config


logger = logging.getLogger("magilab")


def configure_logging(level: str | None = None) -> None:
    """Настраивает журнал приложения"""
    logging.basicConfig(
        level=(level or config.log.level).upper(),
        format=config.log.format,
    )


def report_message(message: str, title: str = "", level: str = "error") -> None:
    """Отправляет сообщение в журнал"""
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.ERROR
    if title:
        logger.log(numeric_level, "%s: %s", title, message)
    else:
        logger.log(numeric_level, "%s", message)

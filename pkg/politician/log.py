from rich.logging import RichHandler
from politician.config import POLITICIAN_LOG_LEVEL

import logging


ROOT_LOGGER_NAME = "politician"


def configure_logging(level: str | int = POLITICIAN_LOG_LEVEL) -> logging.Logger:
    """Attach a rich handler to the package logger (once) and set its level."""
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not any(isinstance(handler, RichHandler) for handler in root.handlers):
        handler = RichHandler(show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel(level)
    return root


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")

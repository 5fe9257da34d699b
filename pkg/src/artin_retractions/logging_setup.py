"""
Structured logging for the engines and the command line
Diagnostics go to stderr so that reports on stdout stay machine readable
"""

import logging
import sys
from typing import Optional

import structlog
from pythonjsonlogger import jsonlogger

from .config import Config

CATEGORIES = ("engine", "oracle", "cli")


def configure_defaults() -> None:
    """Route library events through stdlib logging until configure_logging runs"""
    if structlog.is_configured():
        return
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.KeyValueRenderer(key_order=["event"]),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def configure_logging(level: Optional[str] = None, json_output: Optional[bool] = None,
                      stream=None) -> None:
    """Configure stdlib logging and structlog; a later call replaces the handler"""
    level_name = (level or Config.LOG_LEVEL).upper()
    use_json = Config.LOG_JSON if json_output is None else json_output

    handler = logging.StreamHandler(stream or sys.stderr)
    if use_json:
        handler.setFormatter(jsonlogger.JsonFormatter(
            '%(asctime)s %(name)s %(levelname)s %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
    else:
        handler.setFormatter(logging.Formatter('%(message)s'))

    root = logging.getLogger()
    for existing in list(root.handlers):
        if getattr(existing, "_artin_handler", False):
            root.removeHandler(existing)
    handler._artin_handler = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(getattr(logging, level_name, logging.WARNING))

    renderer = (structlog.processors.JSONRenderer(sort_keys=True) if use_json
                else structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_category_logger(category: str):
    """Logger for one of the event categories (engine, oracle, cli)"""
    if category not in CATEGORIES:
        raise ValueError(f"unknown log category '{category}'")
    return structlog.get_logger(category)

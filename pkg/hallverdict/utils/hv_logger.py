import logging
import os
import sys
import time
from logging.handlers import RotatingFileHandler
from pathlib import Path

logger = logging.getLogger("hallverdict")

LOG_FORMAT = "%(levelname)s - %(asctime)s - %(name)s - %(filename)s - %(caller_name)s - %(subject)s: %(message)s"


def setup_logger(logdir: Path = None):
    """setup the hallverdict logger"""
    if logger.handlers:
        return
    logdir = logdir or Path(__file__).resolve().parent.parent / "logs"
    logdir.mkdir(parents=True, exist_ok=True)
    logger.setLevel(logging.DEBUG)

    # stdout carries the JSON reports, so the console handler writes to stderr
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(os.getenv("HV_LOG_LEVEL", "WARNING").upper())
    formatter = logging.Formatter(LOG_FORMAT)
    formatter.converter = time.gmtime
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    handler = RotatingFileHandler(
        logdir / "hallverdict.log", maxBytes=1048576, backupCount=5
    )
    handler.setLevel(logging.INFO)
    formatter = logging.Formatter(LOG_FORMAT)
    formatter.converter = time.gmtime
    handler.setFormatter(formatter)
    logger.addHandler(handler)

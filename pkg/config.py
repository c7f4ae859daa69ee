import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}. Please fix it in your .env file or environment variables.")


class Config:
    """Configuration class for levelable-kit limits and logging"""

    # Exhaustive-check caps
    FOREST_FACET_CAP = _int_env('LEVELABLE_FOREST_FACET_CAP', 20)
    MAX_BOX = _int_env('LEVELABLE_MAX_BOX', 1_000_000)
    FACE_CAP = _int_env('LEVELABLE_FACE_CAP', 20)

    # Logging
    LOG_LEVEL = os.getenv('LEVELABLE_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

    @classmethod
    def validate_config(cls):
        """Validate that the configured caps and log level are usable"""
        for name in ('FOREST_FACET_CAP', 'MAX_BOX', 'FACE_CAP'):
            if getattr(cls, name) < 1:
                raise ValueError(f"LEVELABLE_{name} must be a positive integer. Please set it in your .env file or environment variables.")
        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            raise ValueError(f"LEVELABLE_LOG_LEVEL {cls.LOG_LEVEL!r} is not a logging level name.")
        return True

    @classmethod
    def configure_logging(cls, level: str = None):
        """Install the stderr handler for the levelable_kit loggers"""
        level = (level or cls.LOG_LEVEL).upper()
        logging.basicConfig(level=level, format=cls.LOG_FORMAT)
        logging.getLogger('levelable_kit').setLevel(level)
        return level

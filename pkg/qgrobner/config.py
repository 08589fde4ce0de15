"""
Configuration settings for qgrobner

Contains configuration constants and environment variable handling
for the command line and the certification services.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

FALLBACK_COLOR = "0"
FALLBACK_LOG_LEVEL = "INFO"
FALLBACK_WORKERS = 1
FALLBACK_REDUCTION_FACTOR = 1
FALLBACK_SEED = 20190501
FALLBACK_DATA_DIR = Path(__file__).parent / "data"


MAX_WORKERS = 32


class EngineConfig:
    """Configuration class for the rewriting and certification engine."""

    def __init__(self):
        """Initialize configuration from environment variables with defaults."""

        self.color = os.getenv("QGROBNER_COLOR", FALLBACK_COLOR).strip() == "1"
        self.log_level = os.getenv("QGROBNER_LOG_LEVEL", FALLBACK_LOG_LEVEL).upper()

        self.workers = int(os.getenv("QGROBNER_WORKERS", FALLBACK_WORKERS))
        self.workers = max(1, min(self.workers, MAX_WORKERS))

        self.reduction_factor = int(
            os.getenv("QGROBNER_REDUCTION_FACTOR", FALLBACK_REDUCTION_FACTOR)
        )
        self.seed = int(os.getenv("QGROBNER_SEED", FALLBACK_SEED))

        self.data_dir = Path(os.getenv("QGROBNER_DATA_DIR", str(FALLBACK_DATA_DIR)))

    def __str__(self) -> str:
        """String representation of configuration."""
        return (
            f"EngineConfig("
            f"color={self.color}, "
            f"log_level={self.log_level}, "
            f"workers={self.workers}, "
            f"data_dir={self.data_dir}"
            f")"
        )


# Global configuration instance
config = EngineConfig()


def get_workers() -> int:
    """Get the configured number of certification workers."""
    return config.workers


def get_data_dir() -> Path:
    """Get the directory holding the committed example corpus."""
    return config.data_dir


def use_color() -> bool:
    """Whether text output should be styled."""
    return config.color

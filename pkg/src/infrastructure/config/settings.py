"""Configuration management using environment variables."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

SHIPPED_RULEBASE_DIR = Path(__file__).resolve().parent.parent / "rulebases" / "data"
SHIPPED_CONFIG_DIR = Path(__file__).resolve().parents[3] / "configs"


class Settings:
    """Application settings loaded from environment variables."""

    LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

    def __init__(self) -> None:
        self.reload()

    def reload(self) -> None:
        """Re-read the environment (tests patch variables with monkeypatch)."""
        # Rulebase search path
        self.RULEBASE_DIR: Path = Path(
            os.getenv("FEARBRAKE_RULEBASE_DIR", str(SHIPPED_RULEBASE_DIR))
        )
        # Logging
        self.LOG_LEVEL: str = os.getenv("FEARBRAKE_LOG_LEVEL", "INFO").upper()
        # Default output directory for traces, charts and summaries
        self.OUTPUT_DIR: Path = Path(os.getenv("FEARBRAKE_OUTPUT_DIR", "out"))

    def validate(self) -> None:
        """Validate settings."""
        if self.LOG_LEVEL not in self.LOG_LEVELS:
            raise ValueError(
                f"FEARBRAKE_LOG_LEVEL must be one of {', '.join(self.LOG_LEVELS)}, got {self.LOG_LEVEL}"
            )


# Global settings instance
settings = Settings()

"""
qres settings: logging, output format and computation limits.
Every value has a default; .env.<ENVIRONMENT> files and the process environment override them.
"""
import logging
import os
from pydantic import BaseSettings, root_validator, validator
from typing import Optional


def _resolve_environment() -> str:
    """Resolve active environment from process env."""
    return os.getenv("ENVIRONMENT", "development").strip().lower()


def _resolve_env_file() -> str:
    """The .env file of the active environment."""
    environment = _resolve_environment()
    env_map = {
        "development": ".env.development",
        "testing": ".env.testing",
        "production": ".env.production",
    }
    return env_map.get(environment, ".env.development")


class Settings(BaseSettings):
    """Settings loaded from environment-specific .env files."""

    # Application Settings
    APP_NAME: str = "qres"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    ENVIRONMENT: str = "development"

    # Logging Settings
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s [%(name)s] %(message)s"

    # Output Settings
    JSON_INDENT: Optional[int] = None
    DOT_RANKDIR: str = "LR"

    # Computation Limits
    MAX_BLOWUPS: int = 256

    @validator("ENVIRONMENT")
    def validate_environment(cls, value: str) -> str:
        """Lower-case and check the environment name."""
        normalized = value.strip().lower()
        allowed = {"development", "testing", "production"}
        if normalized not in allowed:
            raise ValueError(f"ENVIRONMENT must be one of: {', '.join(sorted(allowed))}")
        return normalized

    @validator("LOG_LEVEL")
    def validate_log_level(cls, value: str) -> str:
        """Accept any stdlib level name, case-insensitively."""
        normalized = value.strip().upper()
        if not isinstance(logging.getLevelName(normalized), int):
            raise ValueError(f"LOG_LEVEL must be a logging level name, got {value!r}")
        return normalized

    @validator("DOT_RANKDIR")
    def validate_rankdir(cls, value: str) -> str:
        normalized = value.strip().upper()
        if normalized not in {"LR", "TB"}:
            raise ValueError("DOT_RANKDIR must be LR or TB")
        return normalized

    @validator("MAX_BLOWUPS")
    def validate_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("limits must be positive")
        return value

    @root_validator
    def validate_production_safety(cls, values: dict) -> dict:
        """Production runs are never in debug mode."""
        if values.get("ENVIRONMENT", "development") != "production":
            return values

        if values.get("DEBUG"):
            raise ValueError("DEBUG must be False in production")

        return values

    @property
    def log_level_number(self) -> int:
        """Numeric logging level."""
        return logging.getLevelName(self.LOG_LEVEL)

    class Config:
        """Pydantic config."""
        env_file = _resolve_env_file()
        env_file_encoding = "utf-8"
        case_sensitive = True


# Singleton instance
settings = Settings()

"""
Edge Sched Simulator - Application Configuration
================================================
Centralized configuration using pydantic-settings.
All settings are loaded from environment variables prefixed EDGESCHED_.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from edge_sched.schedulers import SolverLimits
from edge_sched.simulation import FramedConfig


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    Uses pydantic-settings for validation and type coercion.
    """

    model_config = SettingsConfigDict(
        env_prefix="EDGESCHED_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # -------------------------------------------------------------------------
    # Application Settings
    # -------------------------------------------------------------------------
    APP_NAME: str = "edgesched"
    APP_ENV: Literal["development", "staging", "production"] = "development"
    DEBUG: bool = False
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # -------------------------------------------------------------------------
    # Execution
    # -------------------------------------------------------------------------
    THREADS: int = Field(default=0, ge=0)  # 0 = one worker per CPU
    DEFAULT_RUNS: int = Field(default=1000, ge=1)
    DEFAULT_SEED: int = Field(default=0, ge=0)

    # -------------------------------------------------------------------------
    # Solvers
    # -------------------------------------------------------------------------
    EXACT_MAX_VARIABLES: int = Field(default=400, gt=0)
    EXACT_NODE_LIMIT: int = Field(default=2_000_000, gt=0)
    BRUTE_FORCE_MAX_VECTORS: int = Field(default=10**7, gt=0)
    DROP_PENALTY: float = Field(default=0.0, ge=0.0)

    # -------------------------------------------------------------------------
    # Framed Simulation
    # -------------------------------------------------------------------------
    FRAME_LEN_MS: float = Field(default=3000.0, gt=0.0)
    QUEUE_CAP: int = Field(default=4, ge=1)
    FRAMES: int = Field(default=600, ge=1)
    ARRIVAL_RATE: float = Field(default=1.0, ge=0.0)
    BANDWIDTH_NOISE_SIGMA: float = Field(default=0.2, ge=0.0)
    RETRY_REJECTED: bool = True

    @property
    def solver_limits(self) -> SolverLimits:
        """Size guards and node budget for the exact solvers."""
        return SolverLimits(
            max_variables=self.EXACT_MAX_VARIABLES,
            node_limit=self.EXACT_NODE_LIMIT,
            max_vectors=self.BRUTE_FORCE_MAX_VECTORS,
        )

    @property
    def framed_defaults(self) -> FramedConfig:
        return FramedConfig(
            frames=self.FRAMES,
            frame_len_ms=self.FRAME_LEN_MS,
            queue_cap=self.QUEUE_CAP,
            arrival_rate=self.ARRIVAL_RATE,
            bandwidth_noise_sigma=self.BANDWIDTH_NOISE_SIGMA,
            retry_rejected=self.RETRY_REJECTED,
        )


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.
    Uses lru_cache to avoid re-reading environment variables.
    """
    return Settings()


# Global settings instance
settings = get_settings()

from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    PROJECT_NAME: str = "MersenneDiophantine"
    PROJECT_DESCRIPTION: str = "Solver for M_p^x + (M_q+1)^y = (lz)^2 over Mersenne primes"
    PROJECT_VERSION: str = "1.0.0"

    # CORS Settings
    CORS_ORIGINS: List[str] = ["*"]

    # Number theory limits
    TRIAL_DIVISION_LIMIT: int = 1000
    FACTOR_CAP_BITS: int = 64
    RHO_MAX_ITERATIONS: int = 1_000_000
    RHO_SEED: int = 0xC0FFEE

    # Oracle / catalog defaults
    DEFAULT_X_MAX: int = 12
    DEFAULT_Y_MAX: int = 12
    DEFAULT_P_LIMIT: int = 7
    Q_MAX: int = 127
    ORACLE_WORKERS: int = 1

    # HTTP request ceilings
    API_MAX_P_LIMIT: int = 1279
    API_MAX_EXPONENT: int = 64

    # Logging
    LOG_DIR: str = "logs"
    LOG_LEVEL: str = "DEBUG"
    CONSOLE_LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="allow",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        env_prefix="",
    )

    @property
    def factor_cap(self) -> int:
        """Largest exclusive input accepted by the factorizer."""
        return 1 << self.FACTOR_CAP_BITS

settings = Settings()

"""
Configuration settings for KRStrata
"""
from pydantic_settings import BaseSettings
from typing import List

class Settings(BaseSettings):
    """Application settings"""

    # Basic app settings
    APP_NAME: str = "KRStrata"
    DEBUG: bool = False
    VERSION: str = "1.0.0"
    LOG_LEVEL: str = "INFO"

    # Report output
    SCHEMA_VERSION: str = "krstrata.report.v1"

    # Enumeration caps
    MAX_GENUS: int = 6
    ORACLE_MAX_GENUS: int = 3
    INVARIANT_CHECK_MAX_GENUS: int = 4
    ENUMERATION_WORKERS: int = 1

    # Hermitian oracle budget
    HERMITIAN_MAX_RANK: int = 4
    HERMITIAN_MAX_FLAG_RANK: int = 3
    HERMITIAN_MAX_Q: int = 3

    # Largest genus for the unitary flag identity check in `verify`
    FLAG_IDENTITY_MAX_GENUS: int = 8

    # CORS settings
    ALLOWED_HOSTS: List[str] = ["http://localhost:3000", "http://localhost:5000"]

    class Config:
        env_file = ".env"
        case_sensitive = True

# Create settings instance
settings = Settings()

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Oracle
    oracle_cap: int = 8
    oracle_seed: int = 0

    # Enumeration
    enumeration_cap: int = 40320

    # Refiner checks
    check_samples: int = 20
    check_max_stack_length: int = 3

    # Search
    normaliser_cap: int = 40320

    # Application
    log_level: str = "INFO"
    environment: str = "development"
    host: str = "0.0.0.0"
    port: int = 8000

    # Benchmark
    benchmark_path: str = "config/benchmark_queries.json"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="REFINERY_",
        case_sensitive=False,
        extra="allow",
    )


settings = Settings()

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Parallélisme de l'énumération brute (PLHOM_THREADS)
    THREADS: int = 1

    # Budgets - bornes dures, dépassement => BudgetExceededError
    ASSIGN_BUDGET: int = 2 ** 26
    X_BUDGET: int = 10 ** 5
    DEGREE_BUDGET: int = 4
    FACTOR_BUDGET: int = 10 ** 18
    EVEN_SUBGRAPH_EDGE_LIMIT: int = 24

    # Logging
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="PLHOM_", env_file=".env", extra="ignore")

    @property
    def thread_count(self) -> int:
        """Nombre de workers effectif (au moins 1)."""
        return max(1, self.THREADS)


settings = Settings()

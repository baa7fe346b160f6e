from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Tolerances and logging options for qcanon, read from QCANON_* environment
    variables or a .env file.

    rank_rtol decides which singular values count as zero, equal_tol is the
    default relative tolerance of `equal`, and the svd_* fields bound the
    Jacobi iteration. --log-level on the command line overrides log_level.
    """

    app_name: str = "qcanon"
    log_level: str = "warning"
    log_json: bool = False

    # Numerical tolerances
    rank_rtol: float = 1e-10
    equal_tol: float = 1e-12
    svd_offdiag_rtol: float = 1e-15
    svd_max_sweeps: int = 60

    model_config = SettingsConfigDict(
        env_prefix="QCANON_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

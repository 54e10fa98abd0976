from pathlib import Path
from typing import List

from pydantic_settings import BaseSettings

PACKAGE_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    # Enumeration
    min_n: int = 3
    default_n_cap: int = 5
    max_candidates: int = 200_000

    # Fixtures
    fixtures_dir: Path = PACKAGE_DIR / "fixtures"
    cited_caps_file: str = "cited_caps.json"
    delta_notes_file: str = "delta_notes.json"
    branches_file: str = "branches.json"

    # Oracle grid
    oracle_base_genera: List[int] = [0, 1, 2]
    oracle_c1_min: int = -6
    oracle_c1_max: int = 6
    oracle_b_min: int = -6
    oracle_b_max: int = 6
    oracle_rank_min: int = 3
    oracle_rank_max: int = 7

    # Reports
    report_format: str = "table"
    templates_dir: Path = PACKAGE_DIR / "templates"

    # App
    debug: bool = False
    log_level: str = "INFO"
    api_title: str = "genus3 API"
    api_version: str = "1.0.0"

    class Config:
        env_file = ".env"
        env_prefix = "GENUS3_"


settings = Settings()

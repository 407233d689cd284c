import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def load_project_dotenv(path: Path | None = None) -> bool:
    """Load ATOMIC_* overrides from the project .env; the process environment wins."""
    return load_dotenv(path or PROJECT_ROOT / ".env", override=False)


load_project_dotenv()


def _int_env(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


@dataclass(frozen=True)
class Settings:
    orbit_cap: int = field(default_factory=lambda: _int_env("ATOMIC_ORBIT_CAP", 2**27))
    subgroup_cap: int = field(default_factory=lambda: _int_env("ATOMIC_SUBGROUP_CAP", 10**7))
    radius_cap: int = field(default_factory=lambda: _int_env("ATOMIC_RADIUS_CAP", 400))
    core_size_cap: int = field(default_factory=lambda: _int_env("ATOMIC_CORE_SIZE_CAP", 2000))
    threads: int = field(default_factory=lambda: _int_env("ATOMIC_THREADS", os.cpu_count() or 1))
    log_dir: str = field(default_factory=lambda: os.getenv("ATOMIC_LOG_DIR", "logs"))
    log_level: str = field(default_factory=lambda: os.getenv("ATOMIC_LOG_LEVEL", "INFO"))


def get_settings() -> Settings:
    return Settings()

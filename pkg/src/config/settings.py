import os

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


def _env_threads() -> int:
    default = min(8, os.cpu_count() or 1)
    value = os.environ.get("ASSIGNALG_THREADS")
    if not value:
        return default
    try:
        return max(1, int(value))
    except ValueError:
        return default


# Worker cap for per-degree computations
THREADS = _env_threads()

# Cross-check every admissible target choice in the extension recursion
DEBUG_EXTENSION = _env_bool("ASSIGNALG_DEBUG_EXTENSION")

LOG_LEVEL = os.environ.get("ASSIGNALG_LOG_LEVEL", "INFO").upper()
LOG_FILE = os.environ.get("ASSIGNALG_LOG_FILE")

import hashlib
import json
import os
import platform
import sys
from importlib import metadata
from typing import Any, Dict

from config.settings import THREADS


def _package_versions() -> Dict[str, str]:
    versions = {}
    for package in ("sympy", "pandas", "peewee", "typer"):
        try:
            versions[package] = metadata.version(package)
        except metadata.PackageNotFoundError:
            versions[package] = "unavailable"
    return versions


def get_environment_fingerprint() -> Dict[str, Any]:
    return {
        "python": {
            "version": platform.python_version(),
            "implementation": platform.python_implementation(),
            "executable": os.path.realpath(sys.executable or ""),
        },
        "os": {
            "system": platform.system(),
            "release": platform.release(),
            "machine": platform.machine(),
        },
        "threads": THREADS,
        "packages": _package_versions(),
    }


def get_environment_fingerprint_json() -> str:
    return json.dumps(get_environment_fingerprint(), ensure_ascii=False, sort_keys=True)


def document_sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()

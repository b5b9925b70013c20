"""Run ledger storage using Peewee ORM."""

import logging
import os
from typing import Optional

from config.storage import db_path
from db.models import ALL_MODELS, RunModel, db
from utils.fingerprint import get_environment_fingerprint_json
from utils.timestamps import get_iso_datetime, seconds_between

logger = logging.getLogger(__name__)


class Database:
    """Singleton Database class for managing Peewee ORM."""

    _instance: Optional["Database"] = None
    _initialized: bool = False

    def __new__(cls, path: Optional[str] = None) -> "Database":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, path: Optional[str] = None):
        if not self._initialized:
            self.db_path = str(path or db_path())
            os.makedirs(os.path.dirname(self.db_path), exist_ok=True)
            db.init(self.db_path, pragmas={"journal_mode": "wal"})
            self._ensure_schema()
            Database._initialized = True

    @classmethod
    def get_instance(cls, path: Optional[str] = None) -> "Database":
        if cls._instance is None:
            cls._instance = cls(path)
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton so the next call binds a fresh path."""
        if cls._instance is not None:
            cls._instance.close()
        cls._instance = None
        cls._initialized = False

    def _ensure_schema(self):
        db.connect(reuse_if_open=True)
        db.create_tables(ALL_MODELS, safe=True)

    def close(self):
        try:
            if not db.is_closed():
                db.close()
        except Exception:
            pass

    def record_run(
        self,
        command: str,
        started_at: str,
        exit_code: int,
        verdict: Optional[str] = None,
        degree_bound: Optional[int] = None,
        document_sha256: Optional[str] = None,
    ) -> int:
        """Store one invocation and return its ID."""
        ended_at = get_iso_datetime()
        duration = None
        try:
            duration = seconds_between(started_at, ended_at)
        except ValueError as exc:
            logger.warning("Failed to compute duration for %s: %s", command, exc)
        run = RunModel.create(
            command=command,
            document_sha256=document_sha256,
            degree_bound=degree_bound,
            verdict=verdict,
            exit_code=exit_code,
            created_at=started_at,
            duration_seconds=duration,
            environment_fingerprint=get_environment_fingerprint_json(),
        )
        logger.info("Recorded run %s (%s, exit %d)", run.id, command, exit_code)
        return run.id

    def recent_runs(self, limit: int = 20) -> list[RunModel]:
        return list(RunModel.select().order_by(RunModel.id.desc()).limit(limit))

"""Peewee ORM models for the run ledger."""

import json
from typing import Any, Dict

from peewee import (
    AutoField,
    CharField,
    FloatField,
    IntegerField,
    Model,
    SqliteDatabase,
    TextField,
)


# Database instance - will be initialized by Database class
db = SqliteDatabase(None)


class BaseModel(Model):
    class Meta:
        database = db


class RunModel(BaseModel):
    """One CLI invocation recorded with ``--record``."""

    id = AutoField()
    command = CharField()
    document_sha256 = CharField(null=True)
    degree_bound = IntegerField(null=True)
    verdict = CharField(null=True)
    exit_code = IntegerField()
    created_at = CharField()
    duration_seconds = FloatField(null=True)
    environment_fingerprint = TextField(null=True)

    class Meta:
        table_name = "runs"

    @property
    def environment_fingerprint_json(self) -> Dict[str, Any]:
        if not self.environment_fingerprint:
            return {}
        try:
            return json.loads(self.environment_fingerprint)
        except json.JSONDecodeError:
            return {}


ALL_MODELS = [RunModel]

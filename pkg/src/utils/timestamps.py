from datetime import datetime, timezone


def get_iso_datetime() -> str:
    """Get current datetime in ISO format with UTC timezone"""
    return (
        datetime.now(timezone.utc)
        .isoformat(timespec="milliseconds")
        .replace("+00:00", "Z")
    )


def parse_iso_datetime(timestamp: str) -> datetime:
    return datetime.fromisoformat(timestamp.replace("Z", "+00:00"))


def seconds_between(start: str, end: str) -> float:
    return round((parse_iso_datetime(end) - parse_iso_datetime(start)).total_seconds(), 3)

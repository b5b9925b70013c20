import logging

from config.settings import LOG_FILE, LOG_LEVEL

handlers: list[logging.Handler] = [logging.StreamHandler()]
if LOG_FILE:
    handlers.append(logging.FileHandler(LOG_FILE))

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=handlers,
)

# Suppress verbose Peewee SQL debug logs
logging.getLogger("peewee").setLevel(logging.WARNING)

from cli.commands import app  # noqa: E402


def cli():
    """CLI entry point for the assignalg command."""
    app()


if __name__ == "__main__":
    cli()

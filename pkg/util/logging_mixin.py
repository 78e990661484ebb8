import logging

from rich.console import Console
from rich.logging import RichHandler

from config.settings import LOG_LEVEL

_stderr_console = Console(stderr=True)


def setup_logging(level: int = LOG_LEVEL):
    """Leitet alle Logs über Rich nach stderr, stdout bleibt für Ergebnisse frei."""
    logging.basicConfig(
        level=level,
        format="%(name)s - %(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=_stderr_console, show_path=False)],
        force=True,
    )


class LoggingMixin:
    @property
    def logger(self) -> logging.Logger:
        if not hasattr(self, "_logger"):
            # Klassenname als Logger-Name verwenden
            self._logger = logging.getLogger(f"triplecheck.{self.__class__.__name__}")
        return self._logger

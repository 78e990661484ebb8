import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import wraps
from typing import Callable, Iterable, List, Optional, TypeVar

from config.settings import VERIFY_MAX_WORKERS

T = TypeVar("T")
R = TypeVar("R")


def log_exceptions_from_self_logger(
    context: str = "", on_error: Optional[Callable[..., R]] = None
):
    """
    Decorator für Methoden, die `self.logger` enthalten.
    Holt sich den Logger zur Laufzeit aus dem Objekt und liefert bei einem
    Fehler das Ergebnis von `on_error(e, *args, **kwargs)` (oder None) statt
    abzubrechen.
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                self_instance = args[0]  # 'self' ist immer das erste Argument bei Methoden
                logger = getattr(self_instance, "logger", None) or logging.getLogger(
                    func.__module__
                )
                msg = f"Fehler {context}: {e}" if context else f"Fehler: {e}"
                logger.error(f"❌ {msg}")
                return on_error(e, *args, **kwargs) if on_error else None

        return wrapper

    return decorator


def measure_performance(func: Callable) -> Callable:
    """
    Misst die Laufzeit eines Befehls und loggt sie.
    Besitzt das Ergebnis ein Feld `timing_seconds`, wird es gesetzt.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()

        result = func(*args, **kwargs)

        elapsed_time = time.perf_counter() - start_time
        logging.getLogger(func.__module__).info(
            f"⏱️ {func.__name__}: {elapsed_time:.3f} Sekunden"
        )
        if hasattr(result, "timing_seconds"):
            result.timing_seconds = elapsed_time

        return result

    return wrapper


_thread_pool = ThreadPoolExecutor(max_workers=VERIFY_MAX_WORKERS)


def run_concurrently(func: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Führt `func` für alle Elemente im Thread-Pool aus.
    Die Reihenfolge der Ergebnisse entspricht der Reihenfolge der Eingaben.
    """
    return list(_thread_pool.map(func, items))

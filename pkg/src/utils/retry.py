"""
Tenacity-based retry policies for census checkpoint IO.

Only writes are retried, with an exponential backoff with jitter.
"""

from typing import Optional

from loguru import logger
from tenacity import (
    RetryCallState,
    retry,
    retry_if_exception_type,
    stop_after_attempt,
    wait_random_exponential,
)

from src.config.settings import get_search_config


def _log_before_sleep(retry_state: RetryCallState) -> None:
    error = retry_state.outcome.exception() if retry_state.outcome else None
    logger.warning(
        f"Checkpoint write attempt {retry_state.attempt_number} failed ({error}); "
        f"retrying in {retry_state.next_action.sleep:.1f}s"
    )


def checkpoint_retry(attempts: Optional[int] = None, max_wait: float = 10.0):
    """
    Build a retry decorator for checkpoint writes.

    Args:
        attempts: Total attempts, defaults to search.checkpoint_write_attempts
        max_wait: Upper bound for a single backoff in seconds

    Returns:
        A tenacity retry decorator that re-raises the last OSError
    """
    if attempts is None:
        attempts = get_search_config().checkpoint_write_attempts
    return retry(
        retry=retry_if_exception_type(OSError),
        wait=wait_random_exponential(multiplier=0.5, max=max_wait),
        stop=stop_after_attempt(attempts),
        before_sleep=_log_before_sleep,
        reraise=True,
    )

"""
Cache manager for computed page reports.

Page computations on larger inputs are the expensive part of a run; this
module keeps their serialized reports on disk, keyed by the canonical input
and the page parameters.
"""

import os
import json
import time
import hashlib
import logging
from typing import Any, Dict, Optional

from ..config import Config

logger = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = os.path.join(os.path.expanduser("~"), ".cache", "specseq")


class CacheManager:
    """
    Manages on-disk caching of page reports.

    Entries are keyed by an md5 hash of the canonical input JSON together with
    the page construction method, the page index and the indexing convention.
    Entries older than the configured expiration are treated as missing and
    removed on initialization.
    """

    def __init__(self, config: Config, cache_dir: Optional[str] = None):
        """
        Initialize the cache manager.

        Args:
            config: Configuration object
            cache_dir: Directory for cache files (default: ~/.cache/specseq)
        """
        self.config = config
        self.enabled = config.cache_enabled
        self.cache_dir = cache_dir or DEFAULT_CACHE_DIR
        self.pages_cache_dir = os.path.join(self.cache_dir, "pages")
        os.makedirs(self.pages_cache_dir, exist_ok=True)

        # Cache expiration in seconds (default: 7 days)
        self.cache_expiration = config.cache_expiration if hasattr(config, "cache_expiration") else 7 * 24 * 60 * 60

        self._cleanup_cache()

        logger.info(f"Cache manager initialized with cache directory: {self.cache_dir}")

    def generate_cache_key(self, source: Dict[str, Any], method: str, r: Any, convention: str) -> str:
        """
        Generate a cache key for a page of an input file.

        Args:
            source: Decoded input file
            method: Page construction method
            r: Page index (``inf`` for E^∞)
            convention: Convention name

        Returns:
            A hex digest independent of key order and whitespace in the input
        """
        canonical = json.dumps(source, sort_keys=True, separators=(",", ":"))
        unique_id = f"{canonical}|{method}|{r}|{convention}"
        return hashlib.md5(unique_id.encode("utf-8")).hexdigest()

    def _get_cache_path(self, cache_key: str) -> str:
        return os.path.join(self.pages_cache_dir, f"{cache_key}.json")

    def _is_cache_valid(self, cache_path: str) -> bool:
        """
        Check if a cached file is valid (exists and not expired).

        Args:
            cache_path: Path to the cached file

        Returns:
            True if the cache is valid, False otherwise
        """
        if not os.path.exists(cache_path):
            return False

        cache_mtime = os.path.getmtime(cache_path)
        return (time.time() - cache_mtime) < self.cache_expiration

    def _cleanup_cache(self):
        """Remove expired cache files."""
        for filename in os.listdir(self.pages_cache_dir):
            file_path = os.path.join(self.pages_cache_dir, filename)
            if os.path.isdir(file_path):
                continue
            if (time.time() - os.path.getmtime(file_path)) > self.cache_expiration:
                logger.debug(f"Removing expired cache file: {file_path}")
                os.remove(file_path)

    def get_cached_page(self, cache_key: str) -> Optional[Dict[str, Any]]:
        """
        Get a cached page report if it exists.

        Args:
            cache_key: Key from ``generate_cache_key``

        Returns:
            The decoded report, or None when missing, expired, unreadable or
            caching is disabled
        """
        if not self.enabled:
            return None
        cache_path = self._get_cache_path(cache_key)
        if not self._is_cache_valid(cache_path):
            return None
        try:
            with open(cache_path, "r", encoding="utf-8") as f:
                report = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Ignoring unreadable cache file {cache_path}: {e}")
            return None
        logger.info(f"Using cached page report: {cache_path}")
        return report

    def cache_page(self, cache_key: str, report: Dict[str, Any]) -> None:
        """
        Cache a page report.

        Args:
            cache_key: Key from ``generate_cache_key``
            report: Serialized page report
        """
        if not self.enabled:
            return
        cache_path = self._get_cache_path(cache_key)
        try:
            with open(cache_path, "w", encoding="utf-8") as f:
                json.dump(report, f, ensure_ascii=False)
            logger.info(f"Cached page report: {cache_path}")
        except Exception as e:
            logger.warning(f"Error caching page report: {e}")

    def clear_cache(self) -> None:
        """Remove every cached page report."""
        logger.info("Clearing page cache...")
        for filename in os.listdir(self.pages_cache_dir):
            file_path = os.path.join(self.pages_cache_dir, filename)
            if os.path.isfile(file_path):
                os.remove(file_path)

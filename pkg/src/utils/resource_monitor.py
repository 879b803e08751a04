"""
Utilities for monitoring system resources and sizing the campaign worker pool.
"""

import time
import logging
import threading
import multiprocessing
from typing import Optional, Dict, List
import psutil

logger = logging.getLogger(__name__)


class ResourceMonitor:
    """Monitor CPU usage, system memory and the memory of this process."""

    def __init__(self, interval: float = 1.0):
        """Initialize the resource monitor.

        Args:
            interval: Monitoring interval in seconds
        """
        self.interval = interval
        self._stop_event = threading.Event()
        self._monitor_thread = None
        self._process = psutil.Process()
        self.cpu_percent = 0.0
        self.memory_percent = 0.0
        self.memory_used_gb = 0.0
        self.history: List[Dict[str, float]] = []
        self.max_history_size = 60  # Keep last 60 readings (1 minute at 1s interval)

    def start(self):
        """Start monitoring resources in a background thread."""
        if self._monitor_thread is not None and self._monitor_thread.is_alive():
            logger.warning("Resource monitor is already running")
            return

        self._stop_event.clear()
        self._monitor_thread = threading.Thread(target=self._monitor_loop)
        self._monitor_thread.daemon = True
        self._monitor_thread.start()
        logger.debug("Resource monitor started")

    def stop(self):
        """Stop the monitoring thread."""
        if self._monitor_thread is None or not self._monitor_thread.is_alive():
            return

        self._stop_event.set()
        self._monitor_thread.join(timeout=2.0)
        logger.debug("Resource monitor stopped")

    def _monitor_loop(self):
        while not self._stop_event.is_set():
            self._update_metrics()
            self._stop_event.wait(self.interval)

    def _update_metrics(self):
        self.cpu_percent = psutil.cpu_percent(interval=None)
        self.memory_percent = psutil.virtual_memory().percent
        try:
            self.memory_used_gb = self._process.memory_info().rss / (1024 ** 3)
        except psutil.Error as e:
            logger.debug(f"Error reading process memory: {e}")
            self.memory_used_gb = 0.0

        self.history.append({
            'timestamp': time.time(),
            'cpu_percent': self.cpu_percent,
            'memory_percent': self.memory_percent,
            'memory_used_gb': self.memory_used_gb,
        })
        if len(self.history) > self.max_history_size:
            self.history = self.history[-self.max_history_size:]

    def get_metrics(self) -> Dict[str, float]:
        """Get current resource metrics.

        Returns:
            Dictionary with cpu_percent, memory_percent and memory_used_gb
        """
        # Update metrics if not running in background
        if self._monitor_thread is None or not self._monitor_thread.is_alive():
            self._update_metrics()

        return {
            'cpu_percent': self.cpu_percent,
            'memory_percent': self.memory_percent,
            'memory_used_gb': self.memory_used_gb,
        }

    def get_average_metrics(self, seconds: int = 5) -> Dict[str, float]:
        """Get average metrics over the last few samples.

        Args:
            seconds: Number of seconds to average over
        """
        if not self.history:
            return self.get_metrics()

        samples = min(seconds, len(self.history))
        recent = self.history[-samples:]
        return {
            key: sum(m[key] for m in recent) / samples
            for key in ('cpu_percent', 'memory_percent', 'memory_used_gb')
        }

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.stop()


def get_optimal_worker_count(
    min_workers: int = 1,
    max_workers: Optional[int] = None,
    reserve_memory_gb: float = 1.0,
    reserve_cpu_percent: float = 20.0,
    memory_per_worker_gb: float = 0.5
) -> int:
    """Calculate the number of campaign workers the machine can sustain.

    Args:
        min_workers: Minimum number of workers
        max_workers: Maximum number of workers (default: CPU count); a
            SPECSEQ_THREADS setting is passed here
        reserve_memory_gb: Amount of memory to leave free in GB
        reserve_cpu_percent: Percentage of CPU to leave free
        memory_per_worker_gb: Expected peak memory of one instance check

    Returns:
        Worker count clamped to [min_workers, max_workers]
    """
    cpu_count = multiprocessing.cpu_count()
    if not max_workers:
        max_workers = cpu_count

    cpu_based = max(1, int(cpu_count * (100 - reserve_cpu_percent) / 100))

    available_memory_gb = psutil.virtual_memory().available / (1024 ** 3) - reserve_memory_gb
    memory_based = max(1, int(available_memory_gb / memory_per_worker_gb))

    optimal = max(min_workers, min(cpu_based, memory_based, max_workers))

    logger.debug(f"Optimal worker count: {optimal} (CPU: {cpu_based}, Memory: {memory_based})")
    return optimal

"""
Progress reporting for the verification campaign.

Wraps a tqdm bar over the instances being checked, logs progress and
resource usage at intervals, and records checkpoints such as the first
counterexample.
"""

import sys
import time
import logging
from typing import Optional, Dict, Any, List
from tqdm import tqdm
from datetime import datetime, timedelta

from .resource_monitor import ResourceMonitor

logger = logging.getLogger(__name__)


def format_duration(seconds: float) -> str:
    """Render a duration as e.g. ``1h 2m 3s``."""
    delta = timedelta(seconds=int(seconds))
    hours, minutes, secs = delta.seconds // 3600, (delta.seconds // 60) % 60, delta.seconds % 60
    if delta.days > 0:
        return f"{delta.days}d {hours}h {minutes}m"
    if hours > 0:
        return f"{hours}h {minutes}m {secs}s"
    if minutes > 0:
        return f"{minutes}m {secs}s"
    return f"{secs}s"


class ProgressReporter:
    """
    Progress bar and periodic log lines for a batch of instance checks.

    Usable as a context manager; ``update`` is safe to call from the thread
    collecting results.
    """

    def __init__(self,
                 total: int = 100,
                 desc: str = "Checking",
                 unit: str = "instance",
                 monitor_resources: bool = True,
                 log_interval: int = 10,
                 disable: bool = False):
        """
        Initialize a progress reporter.

        Args:
            total: Number of instances to check
            desc: Description of the progress bar
            unit: Unit of items being processed
            monitor_resources: Sample CPU and memory while running
            log_interval: How often to log progress (in seconds)
            disable: Suppress the progress bar (log lines are still written)
        """
        self.total = total
        self.desc = desc
        self.unit = unit
        self.monitor_resources = monitor_resources
        self.log_interval = log_interval
        self.disable = disable

        self.start_time = time.time()
        self.last_log_time = self.start_time
        self.completed = 0
        self.failures = 0
        self.resource_monitor = None
        self.progress_bar = None
        self.checkpoints: List[Dict[str, Any]] = []

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def start(self):
        """Start the progress bar and the resource monitor."""
        self.start_time = time.time()
        self.last_log_time = self.start_time
        self.completed = 0
        self.failures = 0

        self.progress_bar = tqdm(
            total=self.total,
            desc=self.desc,
            unit=self.unit,
            file=sys.stdout,
            disable=self.disable
        )

        if self.monitor_resources and self.resource_monitor is None:
            self.resource_monitor = ResourceMonitor()
            self.resource_monitor.start()

        logger.info(f"Started {self.desc} at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        return self

    def update(self, n: int = 1, failed: bool = False):
        """
        Record finished instances.

        Args:
            n: Number of instances completed
            failed: Whether these instances produced counterexamples
        """
        self.completed += n
        if failed:
            self.failures += n

        if self.progress_bar:
            self.progress_bar.update(n)
            self.progress_bar.set_postfix(counterexamples=self.failures)

        current_time = time.time()
        if current_time - self.last_log_time >= self.log_interval:
            self._log_progress()
            self.last_log_time = current_time

    def add_checkpoint(self, name: str, data: Optional[Dict[str, Any]] = None):
        """
        Record a named event with the current counts.

        Args:
            name: Name of the checkpoint
            data: Optional data to associate with the checkpoint
        """
        checkpoint = {
            'name': name,
            'time': time.time(),
            'completed': self.completed,
            'data': data or {}
        }
        if self.resource_monitor:
            checkpoint['metrics'] = self.resource_monitor.get_metrics()

        self.checkpoints.append(checkpoint)
        logger.debug(f"Checkpoint: {name} at {self.completed}/{self.total} instances")

    def get_estimated_time_remaining(self) -> Optional[float]:
        """Seconds left at the current rate, or None before the first instance."""
        if self.completed == 0:
            return None
        elapsed = time.time() - self.start_time
        rate = self.completed / elapsed if elapsed > 0 else 0
        if rate == 0:
            return None
        return (self.total - self.completed) / rate

    def get_elapsed_time(self) -> float:
        return time.time() - self.start_time

    def _log_progress(self):
        percent = (self.completed / self.total) * 100 if self.total > 0 else 0
        remaining = self.get_estimated_time_remaining()
        remaining_text = "Calculating..." if remaining is None else format_duration(remaining)

        logger.info(
            f"Progress: {self.completed}/{self.total} ({percent:.1f}%) - "
            f"Counterexamples: {self.failures} - "
            f"Elapsed: {format_duration(self.get_elapsed_time())} - Remaining: {remaining_text}"
        )

        if self.resource_monitor:
            metrics = self.resource_monitor.get_average_metrics()
            logger.info(
                f"Resource usage: CPU: {metrics.get('cpu_percent', 0):.1f}% - "
                f"Memory: {metrics.get('memory_used_gb', 0):.2f} GB"
            )

    def close(self):
        """Close the progress bar and stop monitoring."""
        self._log_progress()

        if self.progress_bar:
            self.progress_bar.close()
            self.progress_bar = None

        if self.resource_monitor:
            self.resource_monitor.stop()
            self.resource_monitor = None

        logger.info(
            f"Completed {self.desc} at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} - "
            f"Total time: {format_duration(self.get_elapsed_time())}"
        )

    def get_summary(self) -> Dict[str, Any]:
        return {
            'total': self.total,
            'completed': self.completed,
            'failures': self.failures,
            'percent': (self.completed / self.total) * 100 if self.total > 0 else 0,
            'elapsed': self.get_elapsed_time(),
            'elapsed_formatted': format_duration(self.get_elapsed_time()),
            'checkpoints': self.checkpoints
        }

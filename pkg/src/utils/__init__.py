"""Progress reporting and resource monitoring helpers."""

from .progress import ProgressReporter, format_duration
from .resource_monitor import ResourceMonitor, get_optimal_worker_count

__all__ = ["ProgressReporter", "format_duration", "ResourceMonitor", "get_optimal_worker_count"]

import os
import sys
import time
import pytest
from unittest.mock import patch, MagicMock

# Add the parent directory to the path so we can import the src package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from src.utils.progress import ProgressReporter, format_duration
from src.utils.resource_monitor import ResourceMonitor, get_optimal_worker_count


class TestProgressReporter:
    """Test the ProgressReporter class."""

    def test_init(self):
        """Test initialization of ProgressReporter."""
        progress = ProgressReporter(total=100, desc="Test", unit="it", monitor_resources=False)
        assert progress.total == 100
        assert progress.desc == "Test"
        assert progress.unit == "it"
        assert progress.completed == 0
        assert progress.failures == 0

    def test_update_counts_failures(self):
        """Test updating progress with and without counterexamples."""
        progress = ProgressReporter(total=10, monitor_resources=False, disable=True)
        progress.start()
        progress.update()
        progress.update(2, failed=True)
        assert progress.completed == 3
        assert progress.failures == 2
        progress.close()

    def test_context_manager(self):
        """Test using ProgressReporter as a context manager."""
        with ProgressReporter(total=100, desc="Test", monitor_resources=False, disable=True) as progress:
            assert progress.progress_bar is not None
            progress.update(50)
            assert progress.completed == 50
        assert progress.progress_bar is None

    def test_add_checkpoint(self):
        """Test adding checkpoints."""
        progress = ProgressReporter(total=100, desc="Test", monitor_resources=False)
        progress.add_checkpoint("start")
        progress.update(50)
        progress.add_checkpoint("first counterexample", {"index": 3})

        checkpoints = progress.checkpoints
        assert len(checkpoints) == 2
        assert checkpoints[0]['name'] == "start"
        assert checkpoints[1]['completed'] == 50
        assert checkpoints[1]['data'] == {"index": 3}

        # Check that timestamps are increasing
        assert checkpoints[0]['time'] <= checkpoints[1]['time']

    def test_time_estimation(self):
        """Test time estimation."""
        progress = ProgressReporter(total=100, monitor_resources=False, disable=True)
        progress.start()
        assert progress.get_estimated_time_remaining() is None

        time.sleep(0.01)
        progress.update(25)
        remaining = progress.get_estimated_time_remaining()
        assert remaining is not None and remaining >= 0
        progress.close()

    def test_elapsed_time(self):
        """Test elapsed time calculation."""
        progress = ProgressReporter(total=100, monitor_resources=False, disable=True)
        progress.start()
        time.sleep(0.1)  # Sleep a bit to ensure elapsed time is non-zero

        assert progress.get_elapsed_time() > 0
        progress.close()

    @patch('psutil.cpu_percent')
    @patch('psutil.virtual_memory')
    def test_checkpoint_records_resources(self, mock_virtual_memory, mock_cpu_percent):
        """Test resource usage monitoring."""
        # Mock psutil responses
        mock_cpu_percent.return_value = 10.0
        mock_memory = MagicMock()
        mock_memory.percent = 50.0
        mock_virtual_memory.return_value = mock_memory

        progress = ProgressReporter(total=100, monitor_resources=True, disable=True)
        progress.start()
        progress.resource_monitor.stop()
        progress.add_checkpoint("sample")

        metrics = progress.checkpoints[0]['metrics']
        assert metrics["cpu_percent"] == 10.0
        assert metrics["memory_percent"] == 50.0

        progress.close()

    def test_get_summary(self):
        """Test getting summary information."""
        progress = ProgressReporter(total=100, monitor_resources=False, disable=True)
        progress.start()
        progress.update(50, failed=True)
        progress.add_checkpoint("middle")

        summary = progress.get_summary()
        assert summary["total"] == 100
        assert summary["completed"] == 50
        assert summary["failures"] == 50
        assert summary["percent"] == 50
        assert len(summary["checkpoints"]) == 1
        assert summary["checkpoints"][0]["name"] == "middle"

        progress.close()


@pytest.mark.parametrize("seconds,expected", [
    (5, "5s"),
    (65, "1m 5s"),
    (3725, "1h 2m 5s"),
    (90000, "1d 1h 0m"),
])
def test_format_duration(seconds, expected):
    assert format_duration(seconds) == expected


@patch('psutil.cpu_percent')
@patch('psutil.virtual_memory')
def test_average_metrics(mock_virtual_memory, mock_cpu_percent):
    """Test averaging over the recorded samples."""
    mock_memory = MagicMock()
    mock_memory.percent = 40.0
    mock_virtual_memory.return_value = mock_memory

    monitor = ResourceMonitor()
    mock_cpu_percent.return_value = 10.0
    monitor._update_metrics()
    mock_cpu_percent.return_value = 30.0
    monitor._update_metrics()

    average = monitor.get_average_metrics()
    assert average["cpu_percent"] == 20.0
    assert average["memory_percent"] == 40.0


@patch('src.utils.resource_monitor.multiprocessing.cpu_count', return_value=8)
@patch('psutil.virtual_memory')
def test_optimal_worker_count(mock_virtual_memory, mock_cpu_count):
    """Test sizing the worker pool from CPU and memory."""
    mock_memory = MagicMock()
    mock_memory.available = 3 * 1024 ** 3
    mock_virtual_memory.return_value = mock_memory

    # 8 CPUs at 80% give 6, 2 GB free at 0.5 GB each give 4
    assert get_optimal_worker_count() == 4
    assert get_optimal_worker_count(max_workers=2) == 2
    assert get_optimal_worker_count(min_workers=5) == 5

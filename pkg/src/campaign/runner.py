"""
Seeded verification campaign.

Instances are generated independently per (seed, index), checked in a
thread pool and collected append-only; results are sorted by index before
they are reported so the outcome does not depend on scheduling.
"""

import os
import time
import logging
import concurrent.futures
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .properties import THEOREMS, Theorem
from ..config import Config
from ..formats import save_file
from ..linalg import Ring
from ..utils import ProgressReporter, get_optimal_worker_count

logger = logging.getLogger(__name__)


@dataclass
class InstanceResult:
    index: int
    violations: List[str]
    elapsed: float
    instance: Any = None


@dataclass
class CampaignResult:
    """Outcome of one campaign run."""
    theorem: str
    seed: int
    count: int
    ring: str
    mutate: bool
    results: List[InstanceResult] = field(default_factory=list)
    counterexample_files: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> List[InstanceResult]:
        return [result for result in self.results if result.violations]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "seed": self.seed,
            "count": self.count,
            "ring": self.ring,
            "mutate": self.mutate,
            "checked": len(self.results),
            "counterexamples": [result.index for result in self.failures],
            "files": list(self.counterexample_files),
            "elapsed": self.elapsed,
        }


def get_theorem(name: str) -> Theorem:
    """
    Look up a campaign property by name.

    Raises:
        KeyError: If no property has that name
    """
    try:
        return THEOREMS[name]
    except KeyError:
        raise KeyError(f"Unknown theorem {name!r}, expected one of {sorted(THEOREMS)}") from None


def check_instance(theorem: Theorem, seed: int, index: int, ring: Ring, mutate: bool = False,
                   r_max: Optional[int] = None) -> InstanceResult:
    """Generate instance ``index`` and run the property on it."""
    start_time = time.time()
    instance = None
    kwargs = {"mutate": mutate}
    if r_max is not None:
        kwargs["r_max"] = r_max
    try:
        instance = theorem.instance(seed, index, ring)
        violations = list(theorem.check(instance, **kwargs))
    except Exception as e:
        logger.error(f"{theorem.name} instance {index} raised {type(e).__name__}: {e}")
        violations = [f"raised {type(e).__name__}: {e}"]
    return InstanceResult(index, violations, time.time() - start_time, instance)


def write_counterexample(theorem: Theorem, seed: int, result: InstanceResult, directory: str) -> str:
    """Write a failing instance with its violations; returns the file path."""
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{theorem.name}-seed{seed}-{result.index}.json")
    save_file({
        "theorem": theorem.name,
        "seed": seed,
        "index": result.index,
        "violations": result.violations,
        "instance": theorem.serialize(result.instance) if result.instance is not None else None,
    }, path)
    return path


def run_campaign(theorem: str,
                 config: Optional[Config] = None,
                 seed: Optional[int] = None,
                 count: Optional[int] = None,
                 ring: Optional[Ring] = None,
                 mutate: bool = False,
                 r_max: Optional[int] = None,
                 workers: Optional[int] = None,
                 show_progress: bool = True) -> CampaignResult:
    """
    Check a property on ``count`` seeded instances.

    Args:
        theorem: Name of the property (see THEOREMS)
        config: Configuration object; supplies defaults for the other arguments
        seed: Campaign seed (default: CAMPAIGN_SEED)
        count: Number of instances (default: CAMPAIGN_COUNT)
        ring: Coefficient ring (default: DEFAULT_RING)
        mutate: Run the deliberately broken comparison
        r_max: Highest page to compare (default: the property's own limit)
        workers: Worker threads (default: from system resources, capped by SPECSEQ_THREADS)
        show_progress: Show the progress bar

    Returns:
        CampaignResult; counterexamples are also written to COUNTEREXAMPLE_DIR
    """
    config = config or Config()
    spec = get_theorem(theorem)
    seed = config.campaign_seed if seed is None else seed
    count = config.campaign_count if count is None else count
    ring = ring or config.ring
    if workers is None:
        workers = get_optimal_worker_count(max_workers=config.threads or None)
    workers = max(1, min(workers, count or 1))

    logger.info(f"Checking {theorem} on {count} instances over {ring.name} "
                f"(seed {seed}, {workers} workers{', mutated' if mutate else ''})")

    start_time = time.time()
    results: List[InstanceResult] = []
    progress = ProgressReporter(total=count, desc=f"Checking {theorem}", disable=not show_progress,
                                monitor_resources=show_progress)

    with progress:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(check_instance, spec, seed, index, ring, mutate, r_max): index
                for index in range(count)
            }
            for future in concurrent.futures.as_completed(futures):
                result = future.result()
                results.append(result)
                progress.update(1, failed=bool(result.violations))
                if result.violations and len([r for r in results if r.violations]) == 1:
                    progress.add_checkpoint("first counterexample", {"index": result.index})

    results.sort(key=lambda result: result.index)
    campaign = CampaignResult(theorem, seed, count, ring.name, mutate, results)

    for result in campaign.failures:
        logger.warning(f"Counterexample {theorem} #{result.index}: {result.violations[0]}")
        campaign.counterexample_files.append(
            write_counterexample(spec, seed, result, config.counterexample_dir))

    campaign.elapsed = time.time() - start_time
    logger.info(f"{theorem}: {len(campaign.failures)} counterexamples in {count} instances")
    return campaign

"""
Suite Runner - Concurrent execution of verification suites

Suites run on a thread pool; each worker pushes its results into a shared,
lock-guarded report buffer. Results carry their submission position, so the
drained report is in the same order no matter how the threads interleave.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .constants import DEFAULT_WORKER_COUNT, SUITE_ALL
from .data_structures import CheckResult, SharedReportBuffer
from .logging_config import get_logger, log_duration
from .suite_utils import SUITE_MODULES, VerificationSuite

# Orders of results within one suite stay below this stride
ORDER_STRIDE = 1_000_000


def expand_suite_names(names: Sequence[str]) -> List[str]:
    """Replace ``all`` by every suite; keep the first occurrence of each name."""
    expanded: List[str] = []
    for name in names:
        for item in SUITE_MODULES if name == SUITE_ALL else [name]:
            if item not in expanded:
                expanded.append(item)
    return expanded


class SuiteRunner:
    """Runs a batch of suites across worker threads."""

    def __init__(
        self,
        workers: int = DEFAULT_WORKER_COUNT,
        shared_buffer: Optional[SharedReportBuffer] = None,
    ):
        if workers < 1:
            raise ValueError(f"Worker count must be positive, got {workers}")
        self.logger = get_logger(__name__)
        self.workers = workers
        self.shared_buffer = shared_buffer or SharedReportBuffer()

    def _run_one(
        self, position: int, suite: VerificationSuite, overrides: Mapping[str, Any]
    ) -> None:
        with log_duration(self.logger, f"Suite {suite.name}"):
            try:
                results = suite.run(overrides)
            except Exception as e:
                self.logger.error(f"Suite {suite.name} failed to run: {str(e)}")
                results = [CheckResult(suite.name, "run", False, str(e))]
        ordered = [
            r._replace(order=position * ORDER_STRIDE + i) for i, r in enumerate(results)
        ]
        self.shared_buffer.add_results(ordered)
        failures = sum(not r.passed for r in results)
        self.logger.debug(f"Suite {suite.name}: {len(results)} checks, {failures} failed")

    def run(
        self, names: Sequence[str], overrides: Optional[Mapping[str, Any]] = None
    ) -> List[CheckResult]:
        """Load and run the named suites, returning results in submission order.

        Raises:
            ValueError: If a suite name is unknown
        """
        suites = [VerificationSuite.from_module(n) for n in expand_suite_names(names)]
        overrides = dict(overrides or {})
        self.logger.info(f"Running {len(suites)} suites on {self.workers} workers")
        if self.workers == 1 or len(suites) == 1:
            for position, suite in enumerate(suites):
                self._run_one(position, suite, overrides)
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [
                    pool.submit(self._run_one, position, suite, overrides)
                    for position, suite in enumerate(suites)
                ]
                for future in futures:
                    future.result()
        return self.shared_buffer.drain_results()


def run_suites(
    names: Sequence[str],
    overrides: Optional[Dict[str, Any]] = None,
    workers: int = DEFAULT_WORKER_COUNT,
) -> List[CheckResult]:
    return SuiteRunner(workers).run(names, overrides)

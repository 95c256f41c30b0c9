"""
Data Structures - Core data types and shared buffers

Contains the result records produced by verification suites, the thread-safe buffer
they are collected in, and the immutable run configuration built by the CLI.
"""

import threading
from collections import deque
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from .constants import DEFAULT_WORKER_COUNT, FAIL_STATUS, PASS_STATUS, REPORT_LINE_FORMAT


class CheckResult(NamedTuple):
    """Outcome of a single verification check."""

    suite: str
    name: str
    passed: bool
    detail: str = ""
    order: int = 0

    def format_line(self) -> str:
        status = PASS_STATUS if self.passed else FAIL_STATUS
        detail = f"{self.name}: {self.detail}" if self.detail else self.name
        return REPORT_LINE_FORMAT.format(status=status, suite=self.suite, detail=detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "check": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


class SharedReportBuffer:
    """Shared buffer for check results between suite worker threads."""

    def __init__(self, max_size: int = 1_000_000):
        self.buffer: deque = deque(maxlen=max_size)
        self.lock = threading.Lock()

    def add_results(self, results: List[CheckResult]) -> None:
        """Add multiple results to the buffer (thread-safe)."""
        with self.lock:
            self.buffer.extend(results)

    def drain_results(self) -> List[CheckResult]:
        """Remove and return all results, sorted by submission order (thread-safe)."""
        with self.lock:
            results = list(self.buffer)
            self.buffer.clear()
        return sorted(results, key=lambda r: r.order)

    def size(self) -> int:
        """Get current buffer size (thread-safe)."""
        with self.lock:
            return len(self.buffer)


class RunConfig(NamedTuple):
    """Parsed command-line configuration for one invocation."""

    command: str
    input_path: Optional[str] = None
    matrix: Optional[str] = None
    mutations: Tuple[int, ...] = ()
    output_format: str = "text"
    suites: Tuple[str, ...] = ()
    max_n: Optional[int] = None
    samples: Optional[int] = None
    rng_seed: Optional[int] = None
    limit: Optional[int] = None
    depth: Optional[int] = None
    workers: int = DEFAULT_WORKER_COUNT
    json_report: bool = False

    def overrides(self) -> Dict[str, Any]:
        """Suite option overrides; unset values are None and leave defaults alone."""
        return {
            "max_n": self.max_n,
            "samples": self.samples,
            "rng_seed": self.rng_seed,
            "limit": self.limit,
            "depth": self.depth,
        }

#!/usr/bin/env python3
"""
Suite Utilities

Functions and classes for loading, validating, and running verification suites.
Every module in ``markedmcg.suites`` defines a SUITE dictionary (name, description,
options with defaults) and a ``run_suite(options)`` function returning CheckResults.
"""

import importlib
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from .data_structures import CheckResult

# Suite name -> module name under markedmcg.suites, in report order
SUITE_MODULES: Dict[str, str] = {
    "braid": "braid",
    "purebraid": "purebraid",
    "sphere": "sphere",
    "genus0": "genus0",
    "genus1-emit": "genus1",
    "annulus": "annulus",
    "flips": "flips",
    "extension": "extension",
    "fourpunct": "fourpunct",
    "autgroup": "autgroup",
}

# Option names the command line can override
KNOWN_OPTIONS = ("max_n", "samples", "rng_seed", "limit", "depth")

RunFunction = Callable[[Dict[str, Any]], List[CheckResult]]


class VerificationSuite:
    """A loaded and validated verification suite."""

    def __init__(self, suite_data: Dict[str, Any], run_function: RunFunction):
        """Initialize the suite with its declaration and run function.

        Args:
            suite_data: The SUITE dictionary of the suite module
            run_function: The module's ``run_suite`` function
        """
        validate_suite_structure(suite_data, run_function)
        self.suite_data = suite_data
        self.name: str = suite_data["name"]
        self.description: str = suite_data.get("description", "")
        self.defaults: Dict[str, Any] = dict(suite_data["options"])
        self.run_function = run_function

    @classmethod
    def from_module(cls, suite_name: str) -> "VerificationSuite":
        """Load a suite by its name.

        Raises:
            ValueError: If the suite name is unknown or the declaration is invalid
        """
        suite_data, run_function = load_suite_definition(suite_name)
        return cls(suite_data, run_function)

    def resolve_options(self, overrides: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        """Defaults updated by the overrides this suite declares; None means unset."""
        options = dict(self.defaults)
        for key, value in (overrides or {}).items():
            if value is not None and key in options:
                options[key] = value
        validate_options(options)
        return options

    def run(self, overrides: Optional[Mapping[str, Any]] = None) -> List[CheckResult]:
        return self.run_function(self.resolve_options(overrides))


def load_suite_definition(suite_name: str) -> Tuple[Dict[str, Any], RunFunction]:
    """Import the module behind ``suite_name`` and return its SUITE and run_suite.

    Raises:
        ValueError: If the suite is unknown or the module is malformed
    """
    if suite_name not in SUITE_MODULES:
        raise ValueError(
            f"Unknown suite '{suite_name}', expected one of {list(SUITE_MODULES)}"
        )
    try:
        module = importlib.import_module(f"markedmcg.suites.{SUITE_MODULES[suite_name]}")
        if not hasattr(module, "SUITE"):
            raise AttributeError("Suite module must contain a 'SUITE' variable")
        suite_data = module.SUITE
        if not isinstance(suite_data, dict):
            raise ValueError("SUITE variable must be a dictionary")
        run_function = getattr(module, "run_suite", None)
        validate_suite_structure(suite_data, run_function)
        return suite_data, run_function  # type: ignore[return-value]
    except Exception as e:
        raise type(e)(f"Error loading suite {suite_name}: {str(e)}")


def validate_suite_structure(
    suite_data: Dict[str, Any], run_function: Optional[Callable] = None
) -> None:
    """Validate the structure of a SUITE declaration.

    Raises:
        ValueError: If keys are missing, options are unknown, or run_suite is absent
    """
    for key in ("name", "options"):
        if key not in suite_data:
            raise ValueError(f"Suite missing required key: {key}")
    if not isinstance(suite_data["options"], dict):
        raise ValueError("Suite 'options' must be a dictionary")
    unknown = set(suite_data["options"]) - set(KNOWN_OPTIONS)
    if unknown:
        raise ValueError(f"Suite declares unknown options: {sorted(unknown)}")
    validate_options(suite_data["options"])
    if run_function is None or not callable(run_function):
        raise ValueError("Suite must define a callable run_suite function")


def validate_options(options: Mapping[str, Any]) -> None:
    """Numeric options must be positive integers; rng_seed may be any integer.

    Raises:
        ValueError: If a value is not an integer in range
    """
    for key, value in options.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"Option '{key}' must be an integer, got {value!r}")
        if key != "rng_seed" and value < 1:
            raise ValueError(f"Option '{key}' must be positive, got {value}")


def result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    """Shorthand used by the suite modules."""
    return CheckResult(suite, name, bool(passed), detail)

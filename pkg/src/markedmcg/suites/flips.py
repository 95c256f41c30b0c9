"""
Flips suite - Flips against matrix mutation

For every triangulation within the exploration depth of a stock triangulation and
every arc, the matrix of the flipped triangulation must equal the mutated matrix.
"""

from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ..cluster import mutate_matrix
from ..constants import DEFAULT_FLIP_DEPTH, DEFAULT_WORKER_COUNT
from ..data_structures import CheckResult
from ..fourpunct import maximal_triangulation, three_self_folded_triangulation
from ..logging_config import get_logger
from ..suite_utils import result
from ..triangulation import (
    TaggedTriangulation,
    annulus,
    explore,
    once_punctured_4gon,
    once_punctured_digon,
    once_punctured_torus,
    polygon_fan,
    twice_punctured_digon,
)

logger = get_logger(__name__)

SUITE = {
    "name": "flips",
    "description": "Flips against matrix mutation on stock triangulations",
    "options": {"depth": DEFAULT_FLIP_DEPTH},
}

MAX_ANNULUS_MARKS = 3
MAX_POLYGON_MARKS = 6


def stock_triangulations() -> List[Tuple[str, Callable[[], TaggedTriangulation]]]:
    stock: List[Tuple[str, Callable[[], TaggedTriangulation]]] = []
    for p in range(1, MAX_ANNULUS_MARKS + 1):
        for q in range(p, MAX_ANNULUS_MARKS + 1):
            stock.append((f"annulus({p},{q})", lambda p=p, q=q: annulus(p, q)))
    for m in range(4, MAX_POLYGON_MARKS + 1):
        stock.append((f"polygon({m})", lambda m=m: polygon_fan(m)))
    stock += [
        ("torus", once_punctured_torus),
        ("punctured digon", once_punctured_digon),
        ("punctured 4-gon", once_punctured_4gon),
        ("twice-punctured digon", twice_punctured_digon),
        ("4-punctured sphere", maximal_triangulation),
        ("4-punctured sphere, self-folded", three_self_folded_triangulation),
    ]
    return stock


def first_mismatch(t: TaggedTriangulation) -> str:
    """Label of the first arc whose flip disagrees with mutation, or ''."""
    B = t.adjacency_matrix()
    for k, label in enumerate(t.labels, start=1):
        if not np.array_equal(t.flip(label).adjacency_matrix(), mutate_matrix(B, k)):
            return label
    return ""


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    results = []
    for title, build in stock_triangulations():
        found = explore(build(), options["depth"], workers=DEFAULT_WORKER_COUNT)
        mismatch = ""
        for t in found:
            label = first_mismatch(t)
            if label:
                mismatch = f"flip of {label} in {t!r}"
                logger.error(f"Flip and mutation disagree: {mismatch}")
                break
        detail = mismatch or f"{len(found)} triangulations"
        results.append(result(name, f"{title} flip is mutation", not mismatch, detail))
    return results

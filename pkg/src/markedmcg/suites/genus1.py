"""
Genus >= 1 suite - Emission of the genus >= 1 presentations

For every surface of the grid the presentation must be emitted (every fundamental
element it needs has a supported finite type), use only declared generators, and
map to the identity of the permutation group of the quotient punctures.
"""

from itertools import combinations_with_replacement
from typing import Any, Dict, List

from ..constants import (
    GENUS1_GENERA,
    GENUS1_MAX_BOUNDARIES,
    GENUS1_MAX_MARKS,
    GENUS1_MAX_PUNCTURES,
)
from ..data_structures import CheckResult
from ..logging_config import get_logger
from ..presentations import mcg_presentation_genus_ge1, theta_images
from ..suite_utils import result
from ..surface import MarkedSurface, SurfaceKind, classify
from ..words import PermutationTarget, verify_homomorphism

logger = get_logger(__name__)

SUITE = {
    "name": "genus1-emit",
    "description": "Emission of the genus >= 1 presentations",
    "options": {"max_n": GENUS1_MAX_PUNCTURES},
}


def grid_surfaces(max_punctures: int) -> List[MarkedSurface]:
    surfaces = []
    marks = range(1, GENUS1_MAX_MARKS + 1)
    for g in GENUS1_GENERA:
        for n in range(0, max_punctures + 1):
            for r in range(0, GENUS1_MAX_BOUNDARIES + 1):
                for boundary in combinations_with_replacement(marks, r):
                    s = MarkedSurface.create(g, boundary, n)
                    if classify(s).kind is not SurfaceKind.EXCLUDED:
                        surfaces.append(s)
    return surfaces


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    results = []
    for s in grid_surfaces(options["max_n"]):
        try:
            p = mcg_presentation_genus_ge1(s)
        except ValueError as e:
            logger.error(f"Could not emit the presentation of {s}: {e}")
            results.append(result(name, f"{s} emitted", False, str(e)))
            continue
        degree = s.punctures + s.r
        theta = verify_homomorphism(p, theta_images(p, degree), PermutationTarget(degree))
        detail = f"{len(p.generators)} generators, {len(p.relators)} relators"
        if not theta.ok:
            detail = f"relator {theta.relator_index} maps to {theta.image}"
        results.append(result(name, f"{s} emitted", theta.ok, detail))
    return results

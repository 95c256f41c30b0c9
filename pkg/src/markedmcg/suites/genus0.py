"""
Genus-0 suite - The genus-0 presentations under θ, boundary degrees and braids

For every surface of the grid, each relator must map to the identity of the
block-permutation group under θ and have zero degree in every orbit of boundary
twists. Every relator of Im π other than the two kernel products must act
trivially once s_k and a_ij are written as braids on n + r strands. The
block-permutation presentation must present a group of order |Σ_S|.
"""

import random
from typing import Any, Dict, List

from ..action import acts_trivially, random_coordinates
from ..constants import (
    DEFAULT_COSET_LIMIT,
    DEFAULT_GENUS0_MAX_PUNCTURES,
    DEFAULT_RNG_SEED,
    GENUS0_BOUNDARY_GRID,
    GENUS0_BRAID_SAMPLE_COUNT,
)
from ..data_structures import CheckResult
from ..presentations import (
    boundary_degree_images,
    impi_relators_in_braid,
    mcg_presentation_genus0,
    sigma_S_presentation,
    theta_images,
)
from ..suite_utils import result
from ..surface import MarkedSurface, SurfaceKind, boundary_orbits, classify, sigma_S_order
from ..words import (
    FreeAbelian,
    Inconclusive,
    PermutationTarget,
    todd_coxeter,
    verify_homomorphism,
)

SUITE = {
    "name": "genus0",
    "description": "Genus-0 presentations under θ, boundary degrees and the braid action",
    "options": {
        "max_n": DEFAULT_GENUS0_MAX_PUNCTURES,
        "limit": DEFAULT_COSET_LIMIT,
        "samples": GENUS0_BRAID_SAMPLE_COUNT,
        "rng_seed": DEFAULT_RNG_SEED,
    },
}

SKIPPED_KINDS = (SurfaceKind.EXCLUDED, SurfaceKind.UNPUNCTURED_ANNULUS)


def grid_surfaces(max_punctures: int) -> List[MarkedSurface]:
    surfaces = []
    for boundary in GENUS0_BOUNDARY_GRID:
        for n in range(0, max_punctures + 1):
            s = MarkedSurface.create(0, boundary, n)
            if classify(s).kind not in SKIPPED_KINDS:
                surfaces.append(s)
    return surfaces


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    rng = random.Random(options["rng_seed"])
    results = []
    for s in grid_surfaces(options["max_n"]):
        p = mcg_presentation_genus0(s)
        degree = s.punctures + s.r
        theta = verify_homomorphism(p, theta_images(p, degree), PermutationTarget(degree))
        detail = "" if theta.ok else f"relator {theta.relator_index} maps to {theta.image}"
        results.append(result(name, f"{s} theta", theta.ok, detail))

        orbits = [b for b in boundary_orbits(s) if b[0] > s.punctures]
        degrees = verify_homomorphism(
            p, boundary_degree_images(p, s), FreeAbelian(len(orbits))
        )
        detail = "" if degrees.ok else f"relator {degrees.relator_index} has degree {degrees.image}"
        results.append(result(name, f"{s} boundary degrees", degrees.ok, detail))

        if degree >= 2:
            samples = random_coordinates(degree, options["samples"], rng)
            relators = impi_relators_in_braid(s)
            failing = [r.to_text() for r in relators if not acts_trivially(r, samples)]
            detail = f"first failing relator {failing[0]}" if failing else f"{len(relators)} relators"
            results.append(result(name, f"{s} braid relators", not failing, detail))

        sigma = sigma_S_presentation(s)
        order = todd_coxeter(sigma, limit=options["limit"])
        expected = sigma_S_order(s)
        if isinstance(order, Inconclusive):
            results.append(result(name, f"{s} Sigma_S order", False, order.reason))
        else:
            results.append(
                result(name, f"{s} Sigma_S order", order == expected, f"{order} of {expected}")
            )
    return results

"""
Fourpunct suite - The 4-punctured sphere

Checks the arrow count of the maximal quiver, the mutation sequence relating the
two stock triangulations, the a2/a4 swap, the extra Z2 factors, and that no other
12-arrow quiver appears near the maximal one.
"""

import random
from typing import Any, Dict, List

from ..autgroup import FourPunctSphereGroup
from ..cluster import arrow_count
from ..constants import DEFAULT_MUTATION_DEPTH, DEFAULT_RNG_SEED
from ..data_structures import CheckResult
from ..fourpunct import (
    MAXIMAL_ARROWS,
    is_maximal_triangulation,
    maximal_seed,
    maximal_triangulation,
    sigma_swap_check,
    three_self_folded_triangulation,
    twelve_arrow_outliers,
    verify_mu6526,
)
from ..suite_utils import result

SUITE = {
    "name": "fourpunct",
    "description": "The 4-punctured sphere quivers and the extra Z2 factors",
    "options": {"depth": DEFAULT_MUTATION_DEPTH, "samples": 20, "rng_seed": DEFAULT_RNG_SEED},
}


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    count = arrow_count(maximal_seed().matrix)
    results = [
        result(name, "maximal quiver arrows", count == MAXIMAL_ARROWS, f"{count}"),
        result(name, "maximal triangulation", is_maximal_triangulation(maximal_triangulation())),
        result(
            name,
            "self-folded triangulation is not maximal",
            not is_maximal_triangulation(three_self_folded_triangulation()),
        ),
    ]

    mutation = verify_mu6526()
    results.append(
        result(name, "mutation sequence reaches the maximal quiver", mutation.passed,
               f"witness {mutation.forward_witness}")
    )
    swap = sigma_swap_check()
    results.append(
        result(name, "a2/a4 swap", swap.passed,
               f"automorphic transpositions {list(swap.automorphic_transpositions)}")
    )

    group = FourPunctSphereGroup()
    e = group.identity()
    bits_ok = all(group.multiply(x, x) == e for x in (group.sigma(), group.mu()))
    rng = random.Random(options["rng_seed"])
    commute_ok = True
    for _ in range(options["samples"]):
        x = group.random_element(rng)
        for bit in (group.sigma(), group.mu()):
            commute_ok &= group.multiply(x, bit) == group.multiply(bit, x)
    results.append(result(name, "extra factors square to the identity", bits_ok))
    results.append(result(name, "extra factors are central", commute_ok))

    outliers = twelve_arrow_outliers(options["depth"])
    results.append(
        result(name, "no other 12-arrow quivers nearby", not outliers, f"{len(outliers)} outliers")
    )
    return results

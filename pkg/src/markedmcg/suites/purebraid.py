"""
Pure braid suite - Pure braid relators expanded into half twists

Each twist a_ij is written as σ_(j-1)⋯σ_(i+1) σ_i² (σ_(j-1)⋯σ_(i+1))⁻¹ and every
relator must then act trivially on sampled curve systems. In B_3 the full twist
(σ1 σ2)³ must act like a12 a13 a23.
"""

import random
from typing import Any, Dict, List

from ..action import acts_trivially, random_coordinates
from ..constants import DEFAULT_PUREBRAID_MAX_N, DEFAULT_RNG_SEED, DEFAULT_SAMPLE_COUNT
from ..data_structures import CheckResult
from ..presentations import a_name, braid_images, pure_braid_presentation
from ..suite_utils import result
from ..words import Word

SUITE = {
    "name": "purebraid",
    "description": "Pure braid relators through the half-twist expansion",
    "options": {
        "max_n": DEFAULT_PUREBRAID_MAX_N,
        "samples": DEFAULT_SAMPLE_COUNT,
        "rng_seed": DEFAULT_RNG_SEED,
    },
}


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    rng = random.Random(options["rng_seed"])
    name = SUITE["name"]
    results = []
    for n in range(3, options["max_n"] + 1):
        p = pure_braid_presentation(n)
        images = braid_images(n)
        samples = random_coordinates(n, options["samples"], rng)
        failing = [
            r.to_text() for r in p.relators if not acts_trivially(r.substitute(images), samples)
        ]
        detail = f"first failing relator {failing[0]}" if failing else f"{len(p.relators)} relators"
        results.append(result(name, f"PB{n} relators", not failing, detail))

    images = braid_images(3)
    full_twist = (Word.gen("s1") * Word.gen("s2")) ** 3
    product = Word.product(images[a_name(i, j)] for i, j in ((1, 2), (1, 3), (2, 3)))
    samples = random_coordinates(3, options["samples"], rng)
    results.append(
        result(
            name,
            "full twist equals a12 a13 a23",
            acts_trivially(full_twist * product.inverse(), samples),
        )
    )
    return results

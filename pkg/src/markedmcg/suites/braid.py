"""
Braid suite - Braid relators and fundamental words acting on Dynnikov coordinates

Every relator of the Artin presentation of B_n must fix every sampled curve system.
For the A(k) subgraph s1..sk of B_(k+1), the word for Δ² must act like the square of
the word for Δ and commute with every generator.
"""

import random
from typing import Any, Dict, List

from ..action import act_word, acts_trivially, random_coordinates, standard_coordinates
from ..artin import SubgraphType, fundamental_word
from ..constants import DEFAULT_BRAID_MAX_N, DEFAULT_RNG_SEED, DEFAULT_SAMPLE_COUNT
from ..data_structures import CheckResult
from ..presentations import braid_presentation, s_name
from ..suite_utils import result
from ..words import Word

SUITE = {
    "name": "braid",
    "description": "Braid relators and fundamental words on Dynnikov coordinates",
    "options": {
        "max_n": DEFAULT_BRAID_MAX_N,
        "samples": DEFAULT_SAMPLE_COUNT,
        "rng_seed": DEFAULT_RNG_SEED,
    },
}

MAX_FUNDAMENTAL_RANK = 5


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    rng = random.Random(options["rng_seed"])
    name = SUITE["name"]
    results = []
    for n in range(3, options["max_n"] + 1):
        p = braid_presentation(n)
        samples = random_coordinates(n, options["samples"], rng)
        failing = [r.to_text() for r in p.relators if not acts_trivially(r, samples)]
        detail = f"first failing relator {failing[0]}" if failing else f"{len(p.relators)} relators"
        results.append(result(name, f"B{n} relators", not failing, detail))
        moved = all(
            act_word(Word.gen(g), standard_coordinates(n)) != standard_coordinates(n)
            for g in p.generators
        )
        results.append(result(name, f"B{n} generators move the standard curves", moved))
        # s_i s_(i+1) carries the curve around punctures i, i+1 to the one around i+1, i+2
        conjugates = True
        for i in range(1, n - 1):
            f = Word.gen(s_name(i)) * Word.gen(s_name(i + 1))
            image = f * Word.gen(s_name(i)) * f.inverse()
            conjugates = conjugates and acts_trivially(
                image * Word.gen(s_name(i + 1), -1), samples
            )
        results.append(result(name, f"B{n} conjugated half twists", conjugates))

    for k in range(2, min(MAX_FUNDAMENTAL_RANK, options["max_n"] - 1) + 1):
        t = SubgraphType("A", k, tuple(s_name(i) for i in range(1, k + 1)))
        delta, delta2 = fundamental_word(t, 1), fundamental_word(t, 2)
        samples = random_coordinates(k + 1, options["samples"], rng)
        squares = acts_trivially(delta * delta * delta2.inverse(), samples)
        central = all(
            acts_trivially(delta2 * Word.gen(g) * delta2.inverse() * Word.gen(g, -1), samples)
            for g in t.order
        )
        results.append(result(name, f"A({k}) delta squared", squares))
        results.append(result(name, f"A({k}) delta squared is central", central))
    return results

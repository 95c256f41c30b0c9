"""
Autgroup suite - The tagged group law and the exceptional groups

Identity, inverses and associativity on random triples for every grid surface, the
stored triple on which the literal transport of R fails, θ-compatibility of the
word part, and the group axioms of the exceptional groups.
"""

import random
from typing import Any, Dict, List

from ..autgroup import (
    Di4xSigma3,
    TaggedMCG,
    ZxS4semiZ2,
    find_axiom_violation,
    literal_counterexample,
    random_triples,
)
from ..constants import DEFAULT_RNG_SEED, DEFAULT_TRIPLE_COUNT
from ..data_structures import CheckResult
from ..suite_utils import result
from ..surface import MarkedSurface

SUITE = {
    "name": "autgroup",
    "description": "Tagged group law and the exceptional groups",
    "options": {"samples": DEFAULT_TRIPLE_COUNT, "rng_seed": DEFAULT_RNG_SEED},
}

GRID = (
    MarkedSurface.create(0, (), 4),
    MarkedSurface.create(0, (), 5),
    MarkedSurface.create(0, (1,), 2),
    MarkedSurface.create(0, (1, 1), 2),
    MarkedSurface.create(1, (), 1),
    MarkedSurface.create(1, (), 2),
    MarkedSurface.create(0, (2, 2), 0),
)


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    rng = random.Random(options["rng_seed"])
    results = []
    for s in GRID:
        group = TaggedMCG.for_surface(s)
        triples = random_triples(group, rng, options["samples"])
        violation = find_axiom_violation(group, triples)
        detail = f"{violation.axiom} fails" if violation else f"{len(triples)} triples"
        results.append(result(name, f"{s} group law", violation is None, detail))
        theta_ok = all(
            group.theta(a.h * b.h)
            == group.permutations.multiply(group.theta(a.h), group.theta(b.h))
            and group.theta(a.h.twist()) == group.theta(a.h)
            for a, b, _ in triples
        )
        results.append(result(name, f"{s} theta is compatible with words", theta_ok))

    literal, (a, b, c) = literal_counterexample()
    left = literal.multiply(literal.multiply(a, b), c)
    right = literal.multiply(a, literal.multiply(b, c))
    results.append(
        result(name, "literal transport is not associative", left != right,
               f"{sorted(left.R)} versus {sorted(right.R)}")
    )

    di4 = Di4xSigma3()
    elements = di4.elements()
    results.append(
        result(name, "Di4xSigma3 order", di4.order() == 48 == len(elements), f"{len(elements)}")
    )
    for group in (di4, ZxS4semiZ2()):
        triples = random_triples(group, rng, options["samples"])
        violation = find_axiom_violation(group, triples)
        detail = f"{violation.axiom} fails" if violation else f"{len(triples)} triples"
        results.append(result(name, f"{group.name} group law", violation is None, detail))
    return results

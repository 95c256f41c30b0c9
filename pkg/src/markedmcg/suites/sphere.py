"""
Sphere suite - Mapping class groups of punctured spheres

The relators of the sphere presentation must die in the symmetric group under
σ_i ↦ (i, i+1), and the abelianization must be cyclic of order gcd(n(n-1), 2(n-1)).
"""

from math import gcd
from typing import Any, Dict, List

from ..constants import DEFAULT_SPHERE_MAX_N
from ..data_structures import CheckResult
from ..presentations import sphere_mcg_presentation, theta_images
from ..suite_utils import result
from ..words import PermutationTarget, abelianization, verify_homomorphism

SUITE = {
    "name": "sphere",
    "description": "Sphere mapping class group quotients and abelianization",
    "options": {"max_n": DEFAULT_SPHERE_MAX_N},
}


def expected_abelianization(n: int) -> List[int]:
    return [gcd(n * (n - 1), 2 * (n - 1))]


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    results = []
    for n in range(4, options["max_n"] + 1):
        p = sphere_mcg_presentation(n)
        check = verify_homomorphism(p, theta_images(p, n), PermutationTarget(n))
        detail = "" if check.ok else f"relator {check.relator_index} maps to {check.image}"
        results.append(result(name, f"Mod(S_0,{n}) onto Sigma_{n}", check.ok, detail))
        divisors = abelianization(p)
        expected = expected_abelianization(n)
        results.append(
            result(
                name,
                f"Mod(S_0,{n}) abelianization",
                divisors == expected,
                f"got {divisors}, expected {expected}",
            )
        )
    return results

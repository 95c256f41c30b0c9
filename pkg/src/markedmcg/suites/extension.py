"""
Extension suite - Group extensions assembled from a kernel and a quotient

Both extensions of Z2 by Z2 are assembled from the same kernel and quotient: the
lift of the quotient generator squares to the kernel generator (cyclic of order 4)
or to the identity (Klein four-group).
"""

from typing import Any, Dict, List

from ..constants import DEFAULT_COSET_LIMIT
from ..data_structures import CheckResult
from ..suite_utils import result
from ..words import IDENTITY, Presentation, Word, abelianization, assemble_extension, todd_coxeter

SUITE = {
    "name": "extension",
    "description": "Group extensions assembled from a normal subgroup and its quotient",
    "options": {"limit": DEFAULT_COSET_LIMIT},
}


def z2_by_z2(square: Word, name: str) -> Presentation:
    """Extension of ⟨k | k²⟩ by ⟨h | h²⟩ in which the lift x of h has x² = ``square``."""
    K = Presentation(["k"], [Word.gen("k", 2)], name="K")
    H = Presentation(["h"], [Word.gen("h", 2)], name="H")
    lifts = {"h": Word.gen("x")}
    w_r = {Word.gen("h", 2): square}
    v = {("h", "k"): Word.gen("k")}
    return assemble_extension(K, H, lifts, w_r, v, name=name)


FIXTURES = (
    ("Z4", Word.gen("k"), [4]),
    ("Z2xZ2", IDENTITY, [2, 2]),
)


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    results = []
    for title, square, expected in FIXTURES:
        p = z2_by_z2(square, title)
        order = todd_coxeter(p, limit=options["limit"])
        divisors = abelianization(p)
        results.append(result(name, f"{title} order", order == 4, f"{order}"))
        results.append(
            result(name, f"{title} abelianization", divisors == expected, f"{divisors}")
        )
    return results

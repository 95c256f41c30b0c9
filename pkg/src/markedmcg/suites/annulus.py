"""
Annulus suite - The annulus groups acting on arcs

Every relator of H_(p,q) (extended by the boundary swap when p = q) must fix every
arc state reachable from the zigzag triangulation. The 1/m twist of annulus(1, m)
must have pairwise distinct powers, and the boundary swap must be an involution.
"""

from typing import Any, Dict, List

from ..action import (
    AnnulusState,
    annulus_orbit,
    annulus_swap,
    annulus_twist,
    annulus_word,
    infinite_order_witness,
)
from ..constants import (
    ANNULUS_GRID,
    ANNULUS_TWIST_MAX_M,
    DEFAULT_ANNULUS_ORBIT_DEPTH,
    DEFAULT_TWIST_POWERS,
)
from ..data_structures import CheckResult
from ..presentations import annulus_presentation
from ..suite_utils import result
from ..words import Word

SUITE = {
    "name": "annulus",
    "description": "Annulus group relations on arcs and the fractional twist",
    "options": {
        "depth": DEFAULT_ANNULUS_ORBIT_DEPTH,
        "max_n": ANNULUS_TWIST_MAX_M,
        "samples": DEFAULT_TWIST_POWERS,
    },
}

# Presentation letters as arc moves; t is its own inverse
MOVES = {("r1", 1): "r1", ("r1", -1): "r1'", ("r2", 1): "r2", ("r2", -1): "r2'"}
MOVES.update({("t", 1): "swap", ("t", -1): "swap"})


def as_moves(word: Word) -> List[str]:
    return [MOVES[letter] for letter in word]


def run_suite(options: Dict[str, Any]) -> List[CheckResult]:
    name = SUITE["name"]
    results = []
    for p, q in ANNULUS_GRID:
        presentation = annulus_presentation(p, q)
        states = annulus_orbit(AnnulusState.zigzag(p, q), options["depth"])
        for relator in presentation.relators:
            moves = as_moves(relator)
            fixed = all(annulus_word(state, moves) == state for state in states)
            results.append(
                result(
                    name,
                    f"H_{p},{q} relator {relator.to_text()}",
                    fixed,
                    f"{len(states)} states",
                )
            )

    for m in range(1, options["max_n"] + 1):
        twist = annulus_twist(m)
        results.append(
            result(
                name,
                f"1/{m} twist has {options['samples']} distinct powers",
                infinite_order_witness(twist, options["samples"]),
            )
        )
    for p in sorted({p for p, q in ANNULUS_GRID if p == q}):
        swap = annulus_swap(p)
        results.append(
            result(
                name,
                f"swap of annulus({p},{p}) is an involution",
                swap.then(swap).is_identity() and (p == 1 or not swap.is_identity()),
            )
        )
    return results

"""
Fourpunct - The 4-punctured sphere: stock triangulations and maximal quivers

Arc labels of the two stock triangulations:

    maximal        four triangles with vertices among the punctures A, B, L, R
                   (a1 L→R, a2 A→L, a3 R→A, a4 B→R, a5 L→B, a6 A→B)
    three-folded   punctures P0..P3; a2, a5, a6 are loops at P0 bounding the
                   self-folded triangles whose radii a3, a4, a1 end at P1, P2, P3

Both quivers are octahedra with 12 arrows; antipodal vertices are a1/a6, a2/a4 and
a3/a5 in the maximal one. The arrow count alone does not tell the two apart, so
maximality of a triangulation also requires that no triangle is self-folded.
"""

from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .cluster import (
    Seed,
    arrow_count,
    mutation_path,
    relabel_seed,
    seed_isomorphic,
    seed_isomorphisms,
)
from .constants import DEFAULT_MUTATION_DEPTH
from .logging_config import get_logger
from .triangulation import TaggedTriangulation

logger = get_logger(__name__)

ARC_LABELS = tuple(f"a{i}" for i in range(1, 7))
MAXIMAL_ARROWS = 12

# Mutation sequence taking the three-folded seed onto the maximal one, and back.
FORWARD_PATH = ("a6", "a5", "a2", "a6")
BACKWARD_PATH = ("a6", "a2", "a5", "a6")

# The swap of the second and fourth arcs
SIGMA_SWAP = ("a2", "a4")


def maximal_triangulation() -> TaggedTriangulation:
    triangles = [
        (("a1", "L"), ("a3", "R"), ("a2", "A")),
        (("a5", "L"), ("a4", "B"), ("a1", "R")),
        (("a2", "L"), ("a6", "A"), ("a5", "B")),
        (("a3", "A"), ("a4", "R"), ("a6", "B")),
    ]
    return TaggedTriangulation.create(
        ARC_LABELS, triangles, {"A", "B", "L", "R"}, name="4-punctured sphere (maximal)"
    )


def three_self_folded_triangulation() -> TaggedTriangulation:
    triangles = [
        (("a2", "P0"), ("a3", "P0"), ("a3", "P1")),
        (("a5", "P0"), ("a4", "P0"), ("a4", "P2")),
        (("a6", "P0"), ("a1", "P0"), ("a1", "P3")),
        (("a2", "P0"), ("a5", "P0"), ("a6", "P0")),
    ]
    return TaggedTriangulation.create(
        ARC_LABELS,
        triangles,
        {"P0", "P1", "P2", "P3"},
        name="4-punctured sphere (three self-folded)",
    )


def maximal_seed() -> Seed:
    return maximal_triangulation().seed()


def b_labelled_seed() -> Seed:
    """The maximal quiver with b_i in the place of a_j, j the swap image of i."""
    swap = dict(zip(SIGMA_SWAP, reversed(SIGMA_SWAP)))
    mapping = {a: a for a in ARC_LABELS}
    mapping.update(swap)
    swapped = relabel_seed(maximal_seed(), mapping)
    return Seed.create([f"b{label[1:]}" for label in swapped.labels], swapped.matrix)


# ============================================================================
# MAXIMALITY
# ============================================================================


def is_maximal_quiver(seed: Seed) -> bool:
    """12 arrows and isomorphic to the maximal quiver.

    Raises:
        ValueError: If the seed does not have rank 6
    """
    if len(seed.labels) != len(ARC_LABELS):
        raise ValueError(f"Expected a rank 6 seed, got rank {len(seed.labels)}")
    if arrow_count(seed.matrix) != MAXIMAL_ARROWS:
        return False
    return seed_isomorphic(seed, maximal_seed()) is not None


def is_maximal_triangulation(t: TaggedTriangulation) -> bool:
    """Maximal quiver and no self-folded triangle."""
    return not t.self_folded() and is_maximal_quiver(t.seed())


# ============================================================================
# MUTATION SEQUENCE
# ============================================================================


class MutationReport(NamedTuple):
    """What the mutation sequence does to the stock seeds."""

    forward_witness: Optional[Dict[str, str]]
    forward_exact: bool
    backward_returns: bool
    maximal_after_forward: bool
    folded_after_flips: int

    @property
    def passed(self) -> bool:
        return self.forward_witness is not None and self.backward_returns


def verify_mu6526() -> MutationReport:
    """Mutate the three-folded seed along the forward path and compare."""
    folded = three_self_folded_triangulation()
    target = maximal_seed()
    forward = mutation_path(folded.seed(), FORWARD_PATH)
    witness = seed_isomorphic(forward, target)
    back = mutation_path(forward, BACKWARD_PATH)
    flipped = folded.flip_path(FORWARD_PATH)
    report = MutationReport(
        forward_witness=witness,
        forward_exact=forward == target,
        backward_returns=back == folded.seed(),
        maximal_after_forward=is_maximal_quiver(mutation_path(target, FORWARD_PATH)),
        folded_after_flips=len(flipped.self_folded()),
    )
    logger.debug(f"Mutation sequence report: {report}")
    return report


# ============================================================================
# THE SWAP
# ============================================================================


def is_automorphism(seed: Seed, mapping: Dict[str, str]) -> bool:
    return relabel_seed(seed, mapping) == seed


def maps_triangles(t: TaggedTriangulation, mapping: Dict[str, str]) -> bool:
    """Whether the relabelling sends every triangle's arcs onto a triangle's arcs."""
    blocks = {frozenset(label for label, _ in tr) for tr in t.triangles}
    return all(frozenset(mapping.get(a, a) for a in block) in blocks for block in blocks)


def transposition_scan(seed: Optional[Seed] = None) -> List[Tuple[str, str]]:
    """Transpositions of arc labels that are quiver automorphisms."""
    seed = seed if seed is not None else maximal_seed()
    found = []
    for a, b in combinations(seed.labels, 2):
        mapping = {label: label for label in seed.labels}
        mapping[a], mapping[b] = b, a
        if is_automorphism(seed, mapping):
            found.append((a, b))
    return found


class SwapReport(NamedTuple):
    involution: bool
    isomorphism: bool
    among_witnesses: bool
    maps_triangles: bool
    automorphic_transpositions: Sequence[Tuple[str, str]]

    @property
    def passed(self) -> bool:
        return (
            self.involution
            and self.isomorphism
            and self.among_witnesses
            and tuple(SIGMA_SWAP) in self.automorphic_transpositions
        )


def sigma_swap_check() -> SwapReport:
    """Check the a2/a4 swap against the maximal quiver and its b-labelled copy."""
    source, target = maximal_seed(), b_labelled_seed()
    t = maximal_triangulation()
    swap = {label: label for label in ARC_LABELS}
    swap[SIGMA_SWAP[0]], swap[SIGMA_SWAP[1]] = SIGMA_SWAP[1], SIGMA_SWAP[0]
    to_b = {a: f"b{swap[a][1:]}" for a in ARC_LABELS}
    witnesses = [dict(m) for m in seed_isomorphisms(source, target)]
    return SwapReport(
        involution=all(swap[swap[a]] == a for a in ARC_LABELS),
        isomorphism=relabel_seed(source, swap) == source,
        among_witnesses=to_b in witnesses,
        maps_triangles=maps_triangles(t, swap),
        automorphic_transpositions=transposition_scan(source),
    )


# ============================================================================
# NEIGHBOURHOOD SCAN
# ============================================================================


def twelve_arrow_outliers(depth: int = DEFAULT_MUTATION_DEPTH) -> List[Seed]:
    """Seeds within ``depth`` mutations of the maximal one with 12 arrows that are
    not isomorphic to it."""
    start = maximal_seed()
    seen = {start}
    frontier = [start]
    outliers = []
    for _ in range(depth):
        fresh = []
        for seed in frontier:
            for label in seed.labels:
                neighbour = seed.mutate(label)
                if neighbour in seen:
                    continue
                seen.add(neighbour)
                fresh.append(neighbour)
                if arrow_count(neighbour.matrix) == MAXIMAL_ARROWS and not is_maximal_quiver(
                    neighbour
                ):
                    outliers.append(neighbour)
        frontier = fresh
    logger.debug(f"Scanned {len(seen)} seeds, {len(outliers)} outliers")
    return outliers

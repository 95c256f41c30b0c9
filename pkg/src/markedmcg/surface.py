"""
Surface - Marked surfaces, their classification and the quotient surface

A marked surface is recorded by its genus, the marked-point counts of its boundary
components and its number of punctures. Boundary components are sorted by their
marked-point count, so that punctures and boundary components carry the total order
p_1 < ... < p_n < b_1 < ... < b_r used throughout the presentations. Collapsing every
boundary component to a puncture gives the quotient surface, whose punctures are
numbered 1..n+r in that order.
"""

from enum import Enum
from itertools import groupby
from math import factorial
from typing import Any, Dict, List, NamedTuple, Sequence, Set, Tuple


class SurfaceKind(str, Enum):
    """Case analysis of marked surfaces."""

    EXCLUDED = "Excluded"
    ONCE_PUNCTURED_CLOSED = "OncePuncturedClosed"
    FOUR_PUNCTURED_SPHERE = "FourPuncturedSphere"
    ONCE_PUNCTURED_4GON = "OncePunctured4gon"
    TWICE_PUNCTURED_DIGON = "TwicePuncturedDigon"
    UNPUNCTURED_ANNULUS = "UnpuncturedAnnulus"
    FEASIBLE_GENUS0 = "FeasibleGenus0"
    FEASIBLE_GENUS_GE1 = "FeasibleGenusGe1"


class SurfaceClass(NamedTuple):
    """A surface kind together with its parameters (only the annulus has any)."""

    kind: SurfaceKind
    params: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.params:
            return f"{self.kind.value}({','.join(str(p) for p in self.params)})"
        return self.kind.value


class QuotientLabel(NamedTuple):
    """What a quotient puncture used to be before boundaries were collapsed."""

    kind: str  # "puncture" or "boundary"
    index: int  # 1-based index among punctures or among boundary components
    marks: int  # marked points on the boundary component, 0 for punctures


class MarkedSurface(NamedTuple):
    """A marked surface (S, M); build it with ``MarkedSurface.create``."""

    genus: int
    boundary: Tuple[int, ...]
    punctures: int

    @classmethod
    def create(
        cls, genus: int, boundary: Sequence[int] = (), punctures: int = 0
    ) -> "MarkedSurface":
        """Validate the data and sort boundary counts ascending.

        Raises:
            ValueError: If a count is negative or a boundary has no marked point
        """
        if genus < 0:
            raise ValueError(f"Genus must be nonnegative, got {genus}")
        if punctures < 0:
            raise ValueError(f"Puncture count must be nonnegative, got {punctures}")
        for marks in boundary:
            if marks < 1:
                raise ValueError(
                    f"Every boundary component needs a marked point, got {marks}"
                )
        return cls(genus, tuple(sorted(int(k) for k in boundary)), int(punctures))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MarkedSurface":
        """Build a surface from the structured description file content."""
        if not isinstance(data, dict):
            raise TypeError("Surface description must be an object")
        for key in ("genus", "punctures", "boundary"):
            if key not in data:
                raise ValueError(f"Surface description missing required key: {key}")
        if not isinstance(data["boundary"], list):
            raise TypeError("Surface field 'boundary' must be an array")
        return cls.create(int(data["genus"]), data["boundary"], int(data["punctures"]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "punctures": self.punctures,
            "boundary": list(self.boundary),
        }

    @property
    def r(self) -> int:
        """Number of boundary components."""
        return len(self.boundary)

    @property
    def marked_points(self) -> int:
        """Total number of marked points on the boundary."""
        return sum(self.boundary)

    def __str__(self) -> str:
        return f"S(g={self.genus}, boundary={list(self.boundary)}, n={self.punctures})"


def _is_excluded(s: MarkedSurface) -> bool:
    if s.r == 0 and s.punctures == 0:
        return True  # no marked points at all
    if s.genus == 0 and s.r == 0 and s.punctures <= 3:
        return True
    if s.genus == 0 and s.r == 1:
        if s.punctures == 0 and s.boundary[0] <= 3:
            return True
        if s.punctures == 1 and s.boundary[0] == 1:
            return True
    return False


def classify(s: MarkedSurface) -> SurfaceClass:
    """Return the unique class of a marked surface."""
    s = MarkedSurface.create(s.genus, s.boundary, s.punctures)
    if _is_excluded(s):
        return SurfaceClass(SurfaceKind.EXCLUDED)
    if s.genus >= 1 and s.r == 0 and s.punctures == 1:
        return SurfaceClass(SurfaceKind.ONCE_PUNCTURED_CLOSED)
    if s.genus == 0:
        if s.r == 0 and s.punctures == 4:
            return SurfaceClass(SurfaceKind.FOUR_PUNCTURED_SPHERE)
        if s.boundary == (4,) and s.punctures == 1:
            return SurfaceClass(SurfaceKind.ONCE_PUNCTURED_4GON)
        if s.boundary == (2,) and s.punctures == 2:
            return SurfaceClass(SurfaceKind.TWICE_PUNCTURED_DIGON)
        if s.r == 2 and s.punctures == 0:
            return SurfaceClass(SurfaceKind.UNPUNCTURED_ANNULUS, s.boundary)
        return SurfaceClass(SurfaceKind.FEASIBLE_GENUS0)
    return SurfaceClass(SurfaceKind.FEASIBLE_GENUS_GE1)


def arc_count(s: MarkedSurface) -> int:
    """Number of arcs in every triangulation of ``s``.

    Raises:
        ValueError: If the surface is Excluded
    """
    if classify(s).kind is SurfaceKind.EXCLUDED:
        raise ValueError(f"{s} admits no triangulation")
    return 6 * s.genus + 3 * s.r + 3 * s.punctures + s.marked_points - 6


def quotient(s: MarkedSurface) -> MarkedSurface:
    """Collapse every boundary component to a puncture."""
    return MarkedSurface.create(s.genus, (), s.punctures + s.r)


def omega_map(s: MarkedSurface) -> Dict[str, int]:
    """Order-preserving map from punctures p_j and boundaries b_l to quotient punctures."""
    omega = {f"p{j}": j for j in range(1, s.punctures + 1)}
    for l in range(1, s.r + 1):
        omega[f"b{l}"] = s.punctures + l
    return omega


def quotient_label(s: MarkedSurface, i: int) -> QuotientLabel:
    """Describe quotient puncture ``i`` (1-based) in terms of the original surface."""
    total = s.punctures + s.r
    if not 1 <= i <= total:
        raise ValueError(f"Quotient puncture {i} out of range 1..{total}")
    if i <= s.punctures:
        return QuotientLabel("puncture", i, 0)
    l = i - s.punctures
    return QuotientLabel("boundary", l, s.boundary[l - 1])


def boundary_orbits(s: MarkedSurface) -> List[List[int]]:
    """Blocks of quotient punctures permuted among themselves by mapping classes.

    Punctures form one block; boundary components with equal marked-point counts
    form one block each.
    """
    blocks: List[List[int]] = []
    if s.punctures:
        blocks.append(list(range(1, s.punctures + 1)))
    position = s.punctures
    for _, group in groupby(s.boundary):
        size = len(list(group))
        blocks.append(list(range(position + 1, position + size + 1)))
        position += size
    return blocks


def index_set_I(s: MarkedSurface) -> Set[int]:
    """Positions k where quotient punctures k and k+1 lie in the same block."""
    total = s.punctures + s.r
    cuts = {s.punctures}
    running = s.punctures
    for block in boundary_orbits(s)[1 if s.punctures else 0 :]:
        running += len(block)
        cuts.add(running)
    return set(range(1, total)) - cuts


def sigma_S_order(s: MarkedSurface) -> int:
    """Order of the group of block-preserving permutations of quotient punctures."""
    order = 1
    for block in boundary_orbits(s):
        order *= factorial(len(block))
    return order

"""
Triangulation - Tagged triangulations of marked surfaces and their flips

A triangle is a counterclockwise triple of sides; each side is (label, start vertex).
Arcs appear in exactly two sides, boundary segments (labels starting with "~") in
exactly one. Vertex names persist through flips, so a flip sequence never moves a
marked point.

A tagged triangulation is stored as an ideal triangulation together with the set of
notched punctures. Swapping the radius and loop labels of a self-folded triangle at
a puncture p while toggling p describes the same tagged triangulation; flipping a
radius goes through that swap.
"""

import threading
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx
import numpy as np

from .cluster import Seed
from .constants import BOUNDARY_SEGMENT_PREFIX, DEFAULT_FLIP_DEPTH
from .logging_config import get_logger, log_duration

logger = get_logger(__name__)

Side = Tuple[str, str]
Triangle = Tuple[Side, Side, Side]

PLAIN = "plain"
NOTCHED = "notched"


def is_boundary_segment(label: str) -> bool:
    return label.startswith(BOUNDARY_SEGMENT_PREFIX)


def rotate(triangle: Triangle, position: int) -> Triangle:
    """The same triangle listed from side ``position`` on."""
    return triangle[position:] + triangle[:position]  # type: ignore[return-value]


def canonical_rotation(triangle: Triangle) -> Triangle:
    return min(rotate(triangle, i) for i in range(3))


class SelfFolded(NamedTuple):
    radius: str
    loop: str
    puncture: str


class TaggedArc(NamedTuple):
    """An arc by its two ends, each a (vertex, tag) pair."""

    label: str
    ends: Tuple[Tuple[str, str], Tuple[str, str]]

    def unlabelled(self) -> Tuple[Tuple[str, str], Tuple[str, str]]:
        return self.ends


class TaggedTriangulation(NamedTuple):
    """Ideal triangulation, arc order and the notched punctures."""

    labels: Tuple[str, ...]
    triangles: Tuple[Triangle, ...]
    punctures: FrozenSet[str]
    notched: FrozenSet[str] = frozenset()
    name: str = ""

    @classmethod
    def create(
        cls,
        labels: Sequence[str],
        triangles: Iterable[Sequence[Sequence[str]]],
        punctures: Iterable[str],
        notched: Iterable[str] = (),
        name: str = "",
    ) -> "TaggedTriangulation":
        """Build and validate a triangulation.

        Raises:
            ValueError: If the sides do not glue into a surface
        """
        tris = tuple(
            tuple((str(label), str(vertex)) for label, vertex in t) for t in triangles
        )
        t = cls(tuple(labels), tris, frozenset(punctures), frozenset(notched), name)  # type: ignore[arg-type]
        t.validate()
        return t

    @classmethod
    def from_label_triangles(
        cls,
        labels: Sequence[str],
        triangles: Sequence[Sequence[str]],
        notched_ends: Iterable[Tuple[str, int]] = (),
        name: str = "",
    ) -> "TaggedTriangulation":
        """Recover vertices from counterclockwise label triples by gluing corners.

        Labels missing from ``labels`` are boundary segments. A vertex is a puncture
        when no boundary segment starts at it.
        """
        arcs = set(labels)
        corners = nx.Graph()
        occurrences: Dict[str, List[Tuple[int, int]]] = {}
        for t, triple in enumerate(triangles):
            if len(triple) != 3:
                raise ValueError(f"Triangle {t} must have three sides, got {list(triple)}")
            for i, label in enumerate(triple):
                corners.add_node((t, i))
                occurrences.setdefault(label, []).append((t, i))
        for label, places in occurrences.items():
            expected = 2 if label in arcs else 1
            if len(places) != expected:
                raise ValueError(
                    f"Label '{label}' appears {len(places)} times, expected {expected}"
                )
            if expected == 2:
                (t1, i1), (t2, i2) = places
                corners.add_edge((t1, i1), (t2, (i2 + 1) % 3))
                corners.add_edge((t1, (i1 + 1) % 3), (t2, i2))
        vertex_of: Dict[Tuple[int, int], str] = {}
        components = sorted(nx.connected_components(corners), key=min)
        for k, component in enumerate(components):
            for corner in component:
                vertex_of[corner] = f"v{k}"
        boundary_vertices = {
            vertex_of[place]
            for label, places in occurrences.items()
            if label not in arcs
            for place in places
        }
        tris = [
            [(label, vertex_of[(t, i)]) for i, label in enumerate(triple)]
            for t, triple in enumerate(triangles)
        ]
        punctures = {v for v in vertex_of.values() if v not in boundary_vertices}
        draft = cls.create(labels, tris, punctures, (), name)
        notched = set()
        for label, end in notched_ends:
            vertex = draft.endpoints(label)[end]
            if vertex not in punctures:
                raise ValueError(f"Arc '{label}' end {end} is on the boundary and cannot be notched")
            notched.add(vertex)
        return draft._replace(notched=frozenset(notched))

    # ------------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------------

    def validate(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"Duplicate arc labels in {self.labels}")
        counts: Dict[str, int] = {}
        for triangle in self.triangles:
            if len(triangle) != 3:
                raise ValueError(f"Triangle {triangle} must have three sides")
            for label, _ in triangle:
                counts[label] = counts.get(label, 0) + 1
        for label in self.labels:
            if counts.get(label) != 2:
                raise ValueError(f"Arc '{label}' borders {counts.get(label, 0)} sides, expected 2")
        for label, count in counts.items():
            if label not in self.labels and (count != 1 or not is_boundary_segment(label)):
                raise ValueError(f"Side '{label}' is neither an arc nor a boundary segment")
        for label in self.labels:
            (u1, v1), (u2, v2) = (self._ends_at(place) for place in self._places(label))
            if (u1, v1) != (v2, u2):
                raise ValueError(f"Arc '{label}' is glued with inconsistent endpoints")
        if not self.notched <= self.punctures:
            raise ValueError(f"Only punctures can be notched, got {sorted(self.notched)}")

    def _places(self, label: str) -> List[Tuple[int, int]]:
        places = [
            (t, i)
            for t, triangle in enumerate(self.triangles)
            for i, (side, _) in enumerate(triangle)
            if side == label
        ]
        if not places:
            raise KeyError(f"Unknown arc '{label}'")
        return places

    def _ends_at(self, place: Tuple[int, int]) -> Tuple[str, str]:
        t, i = place
        triangle = self.triangles[t]
        return triangle[i][1], triangle[(i + 1) % 3][1]

    def endpoints(self, label: str) -> Tuple[str, str]:
        """(start, end) of the arc as traversed in its first triangle."""
        return self._ends_at(self._places(label)[0])

    @property
    def vertices(self) -> FrozenSet[str]:
        return frozenset(v for triangle in self.triangles for _, v in triangle)

    def self_folded(self) -> List[SelfFolded]:
        found = []
        for triangle in self.triangles:
            names = [label for label, _ in triangle]
            for i in range(3):
                if names[i] == names[(i + 1) % 3]:
                    loop = names[(i + 2) % 3]
                    found.append(SelfFolded(names[i], loop, triangle[(i + 1) % 3][1]))
        return found

    def _radius_info(self, label: str) -> Optional[SelfFolded]:
        for folded in self.self_folded():
            if folded.radius == label:
                return folded
        return None

    # ------------------------------------------------------------------------
    # Tagged arcs
    # ------------------------------------------------------------------------

    def tagged_arc(self, label: str) -> TaggedArc:
        """Endpoints and per-end tags of the tagged arc carrying ``label``."""
        if label not in self.labels:
            raise KeyError(f"Unknown arc '{label}'")

        def tag(vertex: str, flipped: bool = False) -> Tuple[str, str]:
            notched = (vertex in self.notched) != flipped
            return vertex, NOTCHED if notched else PLAIN

        for folded in self.self_folded():
            if folded.loop == label:
                base = self.endpoints(folded.radius)
                other = base[0] if base[1] == folded.puncture else base[1]
                ends = (tag(other), tag(folded.puncture, flipped=True))
                return TaggedArc(label, tuple(sorted(ends)))  # type: ignore[arg-type]
        u, v = self.endpoints(label)
        return TaggedArc(label, tuple(sorted((tag(u), tag(v)))))  # type: ignore[arg-type]

    def tagged_arcs(self) -> List[TaggedArc]:
        return [self.tagged_arc(label) for label in self.labels]

    # ------------------------------------------------------------------------
    # Flips
    # ------------------------------------------------------------------------

    def swap_labels(self, a: str, b: str) -> "TaggedTriangulation":
        def rename(label: str) -> str:
            return b if label == a else a if label == b else label

        triangles = tuple(
            tuple((rename(label), v) for label, v in triangle) for triangle in self.triangles
        )
        return self._replace(triangles=triangles)  # type: ignore[arg-type]

    def relabel(self, mapping: Dict[str, str]) -> "TaggedTriangulation":
        """Rename arcs by ``mapping``; arcs missing from it keep their label."""
        def rename(label: str) -> str:
            return mapping.get(label, label)

        labels = tuple(rename(label) for label in self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("Relabelling must be injective on arcs")
        triangles = tuple(
            tuple((rename(label), v) for label, v in triangle) for triangle in self.triangles
        )
        return self._replace(labels=labels, triangles=triangles)  # type: ignore[arg-type]

    def flip(self, label: str) -> "TaggedTriangulation":
        """Replace the tagged arc ``label`` by the unique other completion.

        Raises:
            KeyError: If the label is not an arc
            ValueError: If the label is a boundary segment
        """
        if is_boundary_segment(label):
            raise ValueError(f"Boundary segment '{label}' cannot be flipped")
        if label not in self.labels:
            raise KeyError(f"Unknown arc '{label}'")
        folded = self._radius_info(label)
        if folded is not None:
            # the radius becomes the loop of the same tagged triangulation
            swapped = self.swap_labels(folded.radius, folded.loop)
            toggled = swapped._replace(notched=swapped.notched ^ {folded.puncture})
            return toggled._flip_ideal(label)
        return self._flip_ideal(label)

    def _flip_ideal(self, e: str) -> "TaggedTriangulation":
        (t1, i1), (t2, i2) = self._places(e)
        if t1 == t2:
            raise RuntimeError(f"Arc '{e}' is a radius and has no ideal flip")
        (_, v0), (a, v1), (b, v2) = rotate(self.triangles[t1], i1)
        (_, w1), (c, w0), (d, v3) = rotate(self.triangles[t2], i2)
        if (w0, w1) != (v0, v1):
            raise RuntimeError(f"Triangles around '{e}' are glued inconsistently")
        new_first: Triangle = ((d, v3), (a, v1), (e, v2))
        new_second: Triangle = ((b, v2), (c, v0), (e, v3))
        triangles = list(self.triangles)
        triangles[t1], triangles[t2] = new_first, new_second
        return self._replace(triangles=tuple(triangles))

    def flip_path(self, path: Iterable[str]) -> "TaggedTriangulation":
        t = self
        for label in path:
            t = t.flip(label)
        return t

    # ------------------------------------------------------------------------
    # Exchange matrix
    # ------------------------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        """Signed adjacency matrix; radii copy the rows of their loops."""
        index = {label: k for k, label in enumerate(self.labels)}
        n = len(self.labels)
        M = np.zeros((n, n), dtype=int)
        folded = self.self_folded()
        for triangle in self.triangles:
            names = [label for label, _ in triangle]
            if len(set(names)) < 3:
                continue
            for i in range(3):
                head, tail = names[i], names[i - 1]
                if head in index and tail in index:
                    M[index[head], index[tail]] += 1
                    M[index[tail], index[head]] -= 1
        pi = list(range(n))
        for f in folded:
            pi[index[f.radius]] = index[f.loop]
        B = M[np.ix_(pi, pi)]
        B.flags.writeable = False
        return B

    def seed(self) -> Seed:
        return Seed.create(self.labels, self.adjacency_matrix())

    # ------------------------------------------------------------------------
    # Keys
    # ------------------------------------------------------------------------

    def canonical(self) -> "TaggedTriangulation":
        """Representative where no notched puncture carries a self-folded triangle."""
        t = self
        for folded in self.self_folded():
            if folded.puncture in t.notched:
                t = t.swap_labels(folded.radius, folded.loop)
                t = t._replace(notched=t.notched - {folded.puncture})
        return t

    def key(self) -> Tuple[FrozenSet[Triangle], FrozenSet[str]]:
        """Hashable key of the labelled tagged triangulation."""
        t = self.canonical()
        return frozenset(canonical_rotation(tr) for tr in t.triangles), t.notched

    def unlabelled_key(self) -> FrozenSet[Tuple[Tuple[str, str], Tuple[str, str]]]:
        """Tagged arcs by their ends, forgetting labels."""
        return frozenset(arc.unlabelled() for arc in self.tagged_arcs())

    def __repr__(self) -> str:
        return (
            f"TaggedTriangulation({self.name or '?'}: {len(self.labels)} arcs, "
            f"{len(self.triangles)} triangles, notched={sorted(self.notched)})"
        )


# ============================================================================
# EXPLORATION
# ============================================================================


def explore(
    start: TaggedTriangulation,
    depth: int = DEFAULT_FLIP_DEPTH,
    workers: int = 1,
) -> List[TaggedTriangulation]:
    """Every labelled tagged triangulation within ``depth`` flips of ``start``.

    Levels are expanded breadth first; with ``workers > 1`` each level is fanned out
    over a thread pool sharing one lock-guarded set of seen keys.
    """
    if depth < 0:
        raise ValueError(f"Exploration depth must be nonnegative, got {depth}")
    seen: Set[object] = {start.key()}
    seen_lock = threading.Lock()
    found = [start]
    frontier = deque([start])

    def expand(t: TaggedTriangulation) -> List[TaggedTriangulation]:
        fresh = []
        for label in t.labels:
            neighbour = t.flip(label)
            key = neighbour.key()
            with seen_lock:
                if key in seen:
                    continue
                seen.add(key)
            fresh.append(neighbour)
        return fresh

    with log_duration(logger, f"Flip exploration of {start.name or 'triangulation'} to depth {depth}"):
        for level in range(depth):
            current = list(frontier)
            frontier.clear()
            if workers > 1 and len(current) > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    batches = list(pool.map(expand, current))
            else:
                batches = [expand(t) for t in current]
            for batch in batches:
                frontier.extend(batch)
                found.extend(batch)
            logger.debug(f"Flip level {level + 1}: {len(frontier)} new, {len(found)} total")
            if not frontier:
                break
    return found


# ============================================================================
# STOCK TRIANGULATIONS
# ============================================================================


def polygon_fan(m: int) -> TaggedTriangulation:
    """Disk with m marked points V0..V(m-1), fanned out from V0 by arcs d2..d(m-2)."""
    if m < 3:
        raise ValueError(f"A polygon needs at least 3 marked points, got {m}")
    prefix = BOUNDARY_SEGMENT_PREFIX

    def side_from_apex(j: int) -> Side:
        return (f"{prefix}0", "V0") if j == 1 else (f"d{j}", "V0")

    def side_to_apex(j: int) -> Side:
        return (f"{prefix}{m - 1}", f"V{m - 1}") if j == m - 1 else (f"d{j}", f"V{j}")

    triangles = [
        (side_from_apex(j), (f"{prefix}{j}", f"V{j}"), side_to_apex(j + 1))
        for j in range(1, m - 1)
    ]
    labels = [f"d{j}" for j in range(2, m - 1)]
    return TaggedTriangulation.create(labels, triangles, (), name=f"polygon({m})")


def once_punctured_torus() -> TaggedTriangulation:
    triangle = (("a", "P"), ("b", "P"), ("c", "P"))
    return TaggedTriangulation.create(["a", "b", "c"], [triangle, triangle], {"P"}, name="torus")


def annulus_label(a: int, b: int, p: int, q: int) -> str:
    """Label of the bridging arc from outer point a to inner point b (universal cover)."""
    return f"e{(a + b) % (p + q)}"


def annulus(p: int, q: int, alternating: Optional[bool] = None) -> TaggedTriangulation:
    """Zigzag triangulation of the annulus with p outer and q inner marked points.

    Outer points O0..O(p-1), inner points I0..I(q-1). The arcs e0..e(p+q-1) are
    bridging arcs visited in order: outer-first (all outer steps, then all inner
    steps) or alternating, which is the default when p == q.
    """
    if p < 1 or q < 1:
        raise ValueError(f"Annulus needs p, q >= 1, got p={p}, q={q}")
    if alternating is None:
        alternating = p == q
    if alternating and p != q:
        raise ValueError("Alternating zigzag needs p == q")
    steps = ["o", "i"] * p if alternating else ["o"] * p + ["i"] * q
    prefix = BOUNDARY_SEGMENT_PREFIX
    a = b = 0
    triangles = []
    for step in steps:
        old = (annulus_label(a, b, p, q), f"I{b % q}")
        if step == "o":
            triangles.append(
                (
                    (f"{prefix}o{a % p}", f"O{a % p}"),
                    (annulus_label(a + 1, b, p, q), f"O{(a + 1) % p}"),
                    old,
                )
            )
            a += 1
        else:
            triangles.append(
                (
                    (f"{prefix}i{b % q}", f"I{(b + 1) % q}"),
                    (annulus_label(a, b, p, q), f"I{b % q}"),
                    (annulus_label(a, b + 1, p, q), f"O{a % p}"),
                )
            )
            b += 1
    labels = [f"e{k}" for k in range(p + q)]
    style = "alternating" if alternating else "outer-first"
    return TaggedTriangulation.create(labels, triangles, (), name=f"annulus({p},{q},{style})")


def once_punctured_digon() -> TaggedTriangulation:
    """Digon V0, V1 around the puncture P: loop l at V0 enclosing the radius r."""
    prefix = BOUNDARY_SEGMENT_PREFIX
    triangles = [
        ((f"{prefix}0", "V0"), (f"{prefix}1", "V1"), ("l", "V0")),
        (("l", "V0"), ("r", "V0"), ("r", "P")),
    ]
    return TaggedTriangulation.create(["l", "r"], triangles, {"P"}, name="punctured digon")


def once_punctured_4gon() -> TaggedTriangulation:
    """Square V0..V3 with the puncture P joined to every corner by p0..p3."""
    prefix = BOUNDARY_SEGMENT_PREFIX
    triangles = [
        ((f"{prefix}{i}", f"V{i}"), (f"p{(i + 1) % 4}", f"V{(i + 1) % 4}"), (f"p{i}", "P"))
        for i in range(4)
    ]
    labels = [f"p{i}" for i in range(4)]
    return TaggedTriangulation.create(labels, triangles, {"P"}, name="punctured 4-gon")


def twice_punctured_digon() -> TaggedTriangulation:
    """Digon V0, V1 with punctures P (near ~0) and Q (near ~1) joined by e."""
    prefix = BOUNDARY_SEGMENT_PREFIX
    triangles = [
        ((f"{prefix}0", "V0"), ("b", "V1"), ("a", "P")),
        ((f"{prefix}1", "V1"), ("c", "V0"), ("d", "Q")),
        (("a", "V0"), ("e", "P"), ("c", "Q")),
        (("b", "P"), ("d", "V1"), ("e", "Q")),
    ]
    return TaggedTriangulation.create(
        ["a", "b", "c", "d", "e"], triangles, {"P", "Q"}, name="twice-punctured digon"
    )

"""
Artin - Coxeter graphs, Artin presentations and fundamental elements

A Coxeter graph is stored as an ordered vertex list plus the labels m_ij ≥ 3 of its
edges; unlisted pairs have m_ij = 2. Induced subgraphs of finite type A, B, D, E6
and E7 are recognised with networkx, and their fundamental elements are written
out as explicit words: Δ² is always c^h for the Coxeter element c of the canonical
ordering, and Δ itself is c^(h/2) when the longest element is central, the
triangular word for type A, and otherwise a reduced word of the longest element
read off the integer reflection representation.
"""

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .logging_config import get_logger
from .words import ROLE_ARTIN, Presentation, Word, commutator

logger = get_logger(__name__)

# m_ij = 0 encodes an infinite label (no relation)
INFINITE_LABEL = 0


class CoxeterGraph:
    """A Coxeter graph on named vertices."""

    def __init__(self, vertices: Sequence[str], edges: Optional[Dict[Tuple[str, str], int]] = None):
        self.vertices: List[str] = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Duplicate vertex names in {self.vertices}")
        self._labels: Dict[frozenset, int] = {}
        for (a, b), m in (edges or {}).items():
            self.set_label(a, b, m)

    def set_label(self, a: str, b: str, m: int) -> None:
        if a not in self.vertices or b not in self.vertices:
            raise ValueError(f"Edge {a}-{b} references an unknown vertex")
        if a == b:
            raise ValueError(f"Loop at {a} is not a Coxeter edge")
        if m != INFINITE_LABEL and m < 2:
            raise ValueError(f"Coxeter label m({a},{b}) must be at least 2, got {m}")
        key = frozenset((a, b))
        if m == 2:
            self._labels.pop(key, None)
        else:
            self._labels[key] = m

    def m(self, a: str, b: str) -> int:
        if a == b:
            return 1
        return self._labels.get(frozenset((a, b)), 2)

    def matrix(self) -> np.ndarray:
        """The Coxeter matrix in vertex order."""
        size = len(self.vertices)
        result = np.ones((size, size), dtype=int)
        for i, a in enumerate(self.vertices):
            for j, b in enumerate(self.vertices):
                result[i, j] = self.m(a, b)
        return result

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for key, m in self._labels.items():
            a, b = sorted(key, key=self.vertices.index)
            graph.add_edge(a, b, m=m)
        return graph

    def induced_subgraph(self, names: Iterable[str]) -> "CoxeterGraph":
        chosen = set(names)
        missing = chosen - set(self.vertices)
        if missing:
            raise ValueError(f"Vertices {sorted(missing)} are not in the graph")
        vertices = [v for v in self.vertices if v in chosen]
        sub = CoxeterGraph(vertices)
        for key, m in self._labels.items():
            if key <= chosen:
                a, b = tuple(key)
                sub.set_label(a, b, m)
        return sub

    def __repr__(self) -> str:
        return f"CoxeterGraph({len(self.vertices)} vertices, {len(self._labels)} edges)"


# ============================================================================
# NAMED GRAPHS
# ============================================================================


def coxeter_graph_g1n(g: int, n: int) -> CoxeterGraph:
    """Γ_{g,1,n}: x_0..x_n all joined to y_1, the chain y_1..y_{2g-1}, z on y_3."""
    if g < 1 or n < 0:
        raise ValueError(f"Γ_(g,1,n) needs g >= 1 and n >= 0, got g={g}, n={n}")
    xs = [f"x{i}" for i in range(n + 1)]
    ys = [f"y{j}" for j in range(1, 2 * g)]
    vertices = xs + ys + (["z"] if g >= 2 else [])
    graph = CoxeterGraph(vertices)
    for x in xs:
        graph.set_label(x, "y1", 3)
    for a, b in zip(ys, ys[1:]):
        graph.set_label(a, b, 3)
    if g >= 2:
        graph.set_label("z", "y3", 3)
    return graph


def coxeter_graph_g0n(g: int, n: int) -> CoxeterGraph:
    """Γ_{g,0,n}: Γ_{g,1,n} plus the chain v_1..v_{n-1} with x_i-v_i labelled 4."""
    base = coxeter_graph_g1n(g, n)
    vs = [f"v{i}" for i in range(1, n)]
    graph = CoxeterGraph(base.vertices + vs)
    for key, m in base._labels.items():
        a, b = tuple(key)
        graph.set_label(a, b, m)
    for a, b in zip(vs, vs[1:]):
        graph.set_label(a, b, 3)
    for i in range(1, n):
        graph.set_label(f"x{i}", f"v{i}", 4)
    return graph


# ============================================================================
# ARTIN PRESENTATIONS
# ============================================================================


def prod_word(x: str, y: str, m: int) -> Word:
    """The alternating positive word x y x y ... of length m."""
    if m < 2:
        raise ValueError(f"prod needs m >= 2, got {m}")
    return Word([(x if i % 2 == 0 else y, 1) for i in range(m)])


def artin_presentation(graph: CoxeterGraph, name: str = "") -> Presentation:
    """One relator prod(x_i,x_j,m)·prod(x_j,x_i,m)⁻¹ per pair with finite label."""
    relators = []
    vertices = graph.vertices
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            m = graph.m(a, b)
            if m == INFINITE_LABEL:
                continue
            if m == 2:
                relators.append(commutator(Word.gen(a), Word.gen(b)))
            else:
                relators.append(prod_word(a, b, m) * prod_word(b, a, m).inverse())
    roles = {v: ROLE_ARTIN for v in vertices}
    return Presentation(vertices, relators, roles, name=name or "artin")


# ============================================================================
# FINITE-TYPE SUBGRAPHS
# ============================================================================


class SubgraphType(NamedTuple):
    """Finite type of an induced subgraph with its canonical vertex ordering."""

    kind: str  # "A", "B", "D", "E6", "E7" or "Unsupported"
    k: int
    order: Tuple[str, ...]

    @classmethod
    def standard(cls, kind: str, k: int) -> "SubgraphType":
        """The type with canonical names x1..xk."""
        return cls(kind, k, tuple(f"x{i}" for i in range(1, k + 1)))

    @property
    def supported(self) -> bool:
        return self.kind != UNSUPPORTED

    def __str__(self) -> str:
        if self.kind in ("E6", "E7", UNSUPPORTED):
            return self.kind
        return f"{self.kind}({self.k})"


UNSUPPORTED = "Unsupported"


def _unsupported(names: Sequence[str]) -> SubgraphType:
    return SubgraphType(UNSUPPORTED, len(names), tuple(names))


def classify_induced(graph: CoxeterGraph, subset: Iterable[str]) -> SubgraphType:
    """Recognise the finite type of the subgraph induced on ``subset``."""
    names = [v for v in graph.vertices if v in set(subset)]
    if not names:
        raise ValueError("Cannot classify an empty vertex subset")
    rank = graph.vertices.index
    sub = graph.to_networkx().subgraph(names)
    if len(names) == 1:
        return SubgraphType("A", 1, (names[0],))
    if not nx.is_tree(sub):
        return _unsupported(names)
    labels = [data["m"] for _, _, data in sub.edges(data=True)]
    if any(m not in (3, 4) for m in labels):
        return _unsupported(names)
    fours = labels.count(4)
    degrees = dict(sub.degree())
    branch = [v for v, d in degrees.items() if d >= 3]

    if not branch:
        ends = sorted((v for v, d in degrees.items() if d == 1), key=rank)
        path = nx.shortest_path(sub, ends[0], ends[1])
        if fours == 0:
            return SubgraphType("A", len(path), tuple(path))
        if fours == 1:
            for candidate in (path, path[::-1]):
                if sub.edges[candidate[0], candidate[1]]["m"] == 4:
                    return SubgraphType("B", len(path), tuple(candidate))
        return _unsupported(names)

    if fours or len(branch) != 1 or degrees[branch[0]] != 3:
        return _unsupported(names)
    centre = branch[0]
    arms = []
    for neighbour in sorted(sub.neighbors(centre), key=rank):
        arm = [neighbour]
        previous = centre
        while degrees[arm[-1]] == 2:
            step = next(w for w in sub.neighbors(arm[-1]) if w != previous)
            previous = arm[-1]
            arm.append(step)
        arms.append(arm)
    arms.sort(key=len, reverse=True)
    shape = tuple(sorted(len(a) for a in arms))
    order = tuple(arms[0][::-1] + [centre] + arms[1] + arms[2])
    if shape[:2] == (1, 1):
        return SubgraphType("D", len(names), order)
    if shape == (1, 2, 2):
        return SubgraphType("E6", 6, order)
    if shape == (1, 2, 3):
        return SubgraphType("E7", 7, order)
    return _unsupported(names)


def coxeter_number(t: SubgraphType) -> int:
    """Order h of a Coxeter element of the given type."""
    if t.kind == "A":
        return t.k + 1
    if t.kind == "B":
        return 2 * t.k
    if t.kind == "D":
        return 2 * t.k - 2
    if t.kind == "E6":
        return 12
    if t.kind == "E7":
        return 18
    raise ValueError(f"No Coxeter number for {t}")


def _cartan_matrix(graph: CoxeterGraph, order: Sequence[str]) -> np.ndarray:
    size = len(order)
    cartan = 2 * np.eye(size, dtype=int)
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            if i == j:
                continue
            m = graph.m(a, b)
            if m == 3:
                cartan[i, j] = -1
            elif m == 4:
                cartan[i, j] = -2 if i < j else -1
            elif m != 2:
                raise ValueError(f"No integer reflection representation for m={m}")
    return cartan


def longest_element_word(graph: CoxeterGraph, order: Sequence[str]) -> Word:
    """A reduced positive word for the longest element of a finite Coxeter group.

    Letters s are appended while w(α_s) is still a positive root, tracking w as an
    integer matrix in the simple-root basis.
    """
    cartan = _cartan_matrix(graph, order)
    size = len(order)
    reflections = []
    for i in range(size):
        s = np.eye(size, dtype=int)
        s[i, :] -= cartan[i, :]
        reflections.append(s)
    w = np.eye(size, dtype=int)
    letters = []
    while True:
        for i in range(size):
            if np.all(w[:, i] >= 0):
                w = w @ reflections[i]
                letters.append((order[i], 1))
                break
        else:
            break
    return Word(letters)


def _graph_for(t: SubgraphType) -> CoxeterGraph:
    graph = CoxeterGraph(t.order)
    if t.kind in ("A", "B"):
        for a, b in zip(t.order, t.order[1:]):
            graph.set_label(a, b, 3)
        if t.kind == "B" and t.k >= 2:
            graph.set_label(t.order[0], t.order[1], 4)
        return graph
    # branched types: long arm reversed, centre, then the remaining arms
    arm_lengths = {"D": (t.k - 3, 1, 1), "E6": (2, 2, 1), "E7": (3, 2, 1)}[t.kind]
    long_arm = arm_lengths[0]
    centre = t.order[long_arm]
    chain = list(t.order[: long_arm + 1])
    for a, b in zip(chain, chain[1:]):
        graph.set_label(a, b, 3)
    position = long_arm + 1
    for length in arm_lengths[1:]:
        arm = [centre] + list(t.order[position : position + length])
        for a, b in zip(arm, arm[1:]):
            graph.set_label(a, b, 3)
        position += length
    return graph


def fundamental_word(t: SubgraphType, power: int) -> Word:
    """Explicit word for Δ^power of the given type over its canonical ordering.

    Raises:
        ValueError: For Unsupported types or powers other than ±1, ±2, ±4
    """
    if not t.supported:
        raise ValueError(f"No fundamental element for unsupported shape {t.order}")
    if power not in (1, 2, 4, -1, -2, -4):
        raise ValueError(f"Fundamental word power must be 1, 2 or 4, got {power}")
    if power < 0:
        return fundamental_word(t, -power).inverse()
    c = Word([(v, 1) for v in t.order])
    h = coxeter_number(t)
    if power == 2:
        return c**h
    if power == 4:
        return (c**h) ** 2
    central = t.kind == "B" or t.kind == "E7" or (t.kind == "D" and t.k % 2 == 0)
    if central or t.k == 1:
        return c ** (h // 2)
    if t.kind == "A":
        letters = []
        for top in range(t.k, 0, -1):
            letters.extend((v, 1) for v in t.order[:top])
        return Word(letters)
    return longest_element_word(_graph_for(t), t.order)


def fundamental_word_for(graph: CoxeterGraph, names: Iterable[str], power: int) -> Word:
    """Δ^power of the subgraph induced on ``names``; the empty set gives the identity.

    Raises:
        ValueError: If the induced subgraph has no supported finite type
    """
    names = list(names)
    if not names:
        return Word()
    t = classify_induced(graph, names)
    if not t.supported:
        raise ValueError(f"Subgraph on {names} is not of a supported finite type")
    logger.debug(f"Δ^{power}({', '.join(names)}) has type {t}")
    return fundamental_word(t, power)

"""
Action - Faithful combinatorial actions of mapping classes

Three engines:
    * the piecewise-linear braid action on Dynnikov coordinates of curve systems in
      the punctured disk (exact, integer, faithful);
    * the action of the annulus generators on labelled arcs of the annulus, written
      in universal-cover coordinates;
    * flip-path realizations of mapping classes on a base tagged triangulation, whose
      equality is decided by tropical y-dynamics along the path.

Dynnikov vectors have 2n entries (a1, b1, ..., an, bn) for B_n; the standard curve
system is (0, 1, 0, 1, ..., 0, 1). Words act letter by letter from left to right.
"""

import random
from itertools import product
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

from .constants import (
    DEFAULT_ANNULUS_ORBIT_DEPTH,
    DEFAULT_RNG_SEED,
    DEFAULT_TWIST_POWERS,
    REALIZATION_SAMPLE_BOUND,
    REALIZATION_SAMPLE_COUNT,
    SAMPLE_COORDINATE_MAX,
    SAMPLE_COORDINATE_MIN,
)
from .logging_config import get_logger
from .triangulation import TaggedTriangulation, annulus
from .words import Word

logger = get_logger(__name__)

DiskCoordinates = Tuple[int, ...]


# ============================================================================
# DYNNIKOV COORDINATES
# ============================================================================


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def strand_count(c: Sequence[int]) -> int:
    if len(c) < 2 or len(c) % 2:
        raise ValueError(f"Dynnikov vector must have positive even length, got {len(c)}")
    return len(c) // 2


def standard_coordinates(n: int) -> DiskCoordinates:
    """Coordinates of the standard curve system in the n-punctured disk."""
    if n < 1:
        raise ValueError(f"Need at least one puncture, got {n}")
    return (0, 1) * n


def random_coordinates(
    n: int, count: int, rng: Optional[random.Random] = None
) -> List[DiskCoordinates]:
    """``count`` vectors with entries uniform in the sample range."""
    rng = rng or random.Random(DEFAULT_RNG_SEED)
    return [
        tuple(rng.randint(SAMPLE_COORDINATE_MIN, SAMPLE_COORDINATE_MAX) for _ in range(2 * n))
        for _ in range(count)
    ]


def apply_braid_letter(c: Sequence[int], i: int, sign: int) -> DiskCoordinates:
    """Apply σ_i (sign 1) or σ_i⁻¹ (sign -1).

    Raises:
        ValueError: If i is outside 1..n-1 or the sign is not ±1
    """
    n = strand_count(c)
    if not 1 <= i <= n - 1:
        raise ValueError(f"Braid letter index {i} out of range 1..{n - 1}")
    if sign not in (1, -1):
        raise ValueError(f"Braid letter sign must be 1 or -1, got {sign}")
    out = list(c)
    a1, b1, a2, b2 = c[2 * i - 2], c[2 * i - 1], c[2 * i], c[2 * i + 1]
    if sign == 1:
        t = a1 - _neg(b1) - a2 + _pos(b2)
        out[2 * i - 2] = a1 + _pos(b1) + _pos(_pos(b2) - t)
        out[2 * i - 1] = b2 - _pos(t)
        out[2 * i] = a2 + _neg(b2) + _neg(_neg(b1) + t)
        out[2 * i + 1] = b1 + _pos(t)
    else:
        t = a1 + _neg(b1) - a2 - _pos(b2)
        out[2 * i - 2] = a1 - _pos(b1) - _pos(_pos(b2) + t)
        out[2 * i - 1] = b2 + _neg(t)
        out[2 * i] = a2 - _neg(b2) - _neg(_neg(b1) - t)
        out[2 * i + 1] = b1 - _neg(t)
    return tuple(out)


def _letter_index(name: str, prefix: str) -> int:
    if not name.startswith(prefix) or not name[len(prefix) :].isdigit():
        raise ValueError(f"Letter '{name}' is not a braid generator {prefix}<i>")
    return int(name[len(prefix) :])


def act_word(w: Word, c: Sequence[int], prefix: str = "s") -> DiskCoordinates:
    """Act by the braid word letter by letter, left to right.

    This is a right action: act_word(u * v, c) == act_word(v, act_word(u, c)).
    """
    out = tuple(c)
    for name, sign in w:
        out = apply_braid_letter(out, _letter_index(name, prefix), sign)
    return out


def acts_trivially(w: Word, samples: Iterable[Sequence[int]], prefix: str = "s") -> bool:
    return all(act_word(w, c, prefix) == tuple(c) for c in samples)


# ============================================================================
# ANNULUS ARCS
# ============================================================================

# Arc kinds: bridging (outer point a to inner point b), outer peripheral from a to
# a', inner peripheral from b to b'. Coordinates live in the universal cover, where
# (a, b) and (a + p, b + q) are the same bridging arc.
BRIDGING = "B"
OUTER = "O"
INNER = "I"

AnnulusArc = Tuple[str, int, int]


class AnnulusState(NamedTuple):
    """Labelled arcs of an annulus with p outer and q inner marked points."""

    p: int
    q: int
    arcs: Tuple[AnnulusArc, ...]

    @classmethod
    def zigzag(cls, p: int, q: int, alternating: Optional[bool] = None) -> "AnnulusState":
        """The arcs e0..e(p+q-1) of the stock annulus triangulation."""
        if p < 1 or q < 1:
            raise ValueError(f"Annulus needs p, q >= 1, got p={p}, q={q}")
        if alternating is None:
            alternating = p == q
        if alternating and p != q:
            raise ValueError("Alternating zigzag needs p == q")
        steps = ["o", "i"] * p if alternating else ["o"] * p + ["i"] * q
        a = b = 0
        arcs = [(BRIDGING, 0, 0)]
        for step in steps[:-1]:
            if step == "o":
                a += 1
            else:
                b += 1
            arcs.append((BRIDGING, a, b))
        return cls(p, q, tuple(canonical_arc(arc, p, q) for arc in arcs))

    def apply(self, kind: str) -> "AnnulusState":
        return annulus_generator(kind, self)


def canonical_arc(arc: AnnulusArc, p: int, q: int) -> AnnulusArc:
    kind, x, y = arc
    if kind == BRIDGING:
        k = x // p
        return kind, x - k * p, y - k * q
    period = p if kind == OUTER else q
    k = x // period
    return kind, x - k * period, y - k * period


def _move(arc: AnnulusArc, kind: str, p: int, q: int) -> AnnulusArc:
    which, x, y = arc
    if kind == "r1":
        if which == BRIDGING:
            return canonical_arc((which, x + 1, y), p, q)
        if which == OUTER:
            return canonical_arc((which, x + 1, y + 1), p, q)
        return arc
    if kind == "r2":
        if which == BRIDGING:
            return canonical_arc((which, x, y - 1), p, q)
        if which == INNER:
            return canonical_arc((which, x - 1, y - 1), p, q)
        return arc
    if kind == "r1'":
        if which == BRIDGING:
            return canonical_arc((which, x - 1, y), p, q)
        if which == OUTER:
            return canonical_arc((which, x - 1, y - 1), p, q)
        return arc
    if kind == "r2'":
        if which == BRIDGING:
            return canonical_arc((which, x, y + 1), p, q)
        if which == INNER:
            return canonical_arc((which, x + 1, y + 1), p, q)
        return arc
    # swap exchanges the boundaries: O_a <-> I_(-a)
    if which == BRIDGING:
        return canonical_arc((BRIDGING, -y, -x), p, q)
    if which == OUTER:
        return canonical_arc((INNER, -y, -x), p, q)
    return canonical_arc((OUTER, -y, -x), p, q)


ANNULUS_GENERATORS = ("r1", "r2", "r1'", "r2'", "swap")


def annulus_generator(kind: str, state: AnnulusState) -> AnnulusState:
    """Apply r1 (1/p twist of the outer boundary), r2 (1/q twist of the inner one),
    their inverses r1', r2', or the boundary swap.

    Raises:
        ValueError: For an unknown generator, or the swap when p != q
    """
    if kind not in ANNULUS_GENERATORS:
        raise ValueError(f"Unknown annulus generator '{kind}'")
    if kind == "swap" and state.p != state.q:
        raise ValueError(f"Boundary swap needs p == q, got p={state.p}, q={state.q}")
    arcs = tuple(_move(arc, kind, state.p, state.q) for arc in state.arcs)
    return state._replace(arcs=arcs)


def annulus_word(state: AnnulusState, kinds: Iterable[str]) -> AnnulusState:
    for kind in kinds:
        state = annulus_generator(kind, state)
    return state


def annulus_orbit(
    start: AnnulusState, depth: int = DEFAULT_ANNULUS_ORBIT_DEPTH
) -> List[AnnulusState]:
    """States reachable from ``start`` by at most ``depth`` generator applications."""
    kinds = [k for k in ANNULUS_GENERATORS if k != "swap" or start.p == start.q]
    seen = {start}
    frontier = [start]
    for _ in range(depth):
        fresh = []
        for state in frontier:
            for kind in kinds:
                image = annulus_generator(kind, state)
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    return sorted(seen)


# ============================================================================
# FLIP-PATH REALIZATIONS
# ============================================================================


def _tropical_mutation(y: List[int], row: Sequence[int], k: int) -> List[int]:
    yk = y[k]
    out = []
    for j, yj in enumerate(y):
        if j == k:
            out.append(-yk)
        else:
            b = int(row[j])
            out.append(yj + max(b, 0) * yk - b * max(yk, 0))
    return out


def _cancel_adjacent(path: Iterable[str]) -> Tuple[str, ...]:
    stack: List[str] = []
    for label in path:
        if stack and stack[-1] == label:
            stack.pop()
        else:
            stack.append(label)
    return tuple(stack)


def _realization_samples(size: int) -> List[List[int]]:
    rng = random.Random(DEFAULT_RNG_SEED)
    bound = REALIZATION_SAMPLE_BOUND
    return [
        [rng.randint(-bound, bound) for _ in range(size)]
        for _ in range(REALIZATION_SAMPLE_COUNT)
    ]


class MappingClassRealization(NamedTuple):
    """A mapping class h given by a flip path from ``base`` to h(base).

    ``relabel[i]`` is the label, in the triangulation reached by ``path``, of the
    image of base arc ``i``; ``tagflips`` are punctures whose tags are changed after h.
    """

    base: TaggedTriangulation
    path: Tuple[str, ...]
    relabel: Tuple[Tuple[str, str], ...]
    tagflips: FrozenSet[str] = frozenset()

    @classmethod
    def create(
        cls,
        base: TaggedTriangulation,
        path: Iterable[str] = (),
        relabel: Optional[Dict[str, str]] = None,
        tagflips: Iterable[str] = (),
    ) -> "MappingClassRealization":
        """Build a realization and check that its relabelling preserves the matrix.

        Raises:
            ValueError: If the relabelling is not a matrix-preserving bijection
        """
        mapping = dict(relabel or {label: label for label in base.labels})
        if sorted(mapping) != sorted(base.labels) or sorted(mapping.values()) != sorted(
            base.labels
        ):
            raise ValueError("Relabelling must be a bijection on the base arcs")
        realization = cls(
            base,
            _cancel_adjacent(path),
            tuple(sorted(mapping.items())),
            frozenset(tagflips),
        )
        if not realization.is_valid():
            raise ValueError("Relabelling does not carry the base matrix to the end matrix")
        return realization

    @classmethod
    def identity(cls, base: TaggedTriangulation) -> "MappingClassRealization":
        return cls.create(base)

    @property
    def mapping(self) -> Dict[str, str]:
        return dict(self.relabel)

    def end_state(self) -> TaggedTriangulation:
        return self.base.flip_path(self.path)

    def is_valid(self) -> bool:
        start = self.base.seed()
        end = self.end_state().seed()
        mapping = self.mapping
        return all(
            start.entry(i, j) == end.entry(mapping[i], mapping[j])
            for i in start.labels
            for j in start.labels
        )

    # ------------------------------------------------------------------------
    # Group operations
    # ------------------------------------------------------------------------

    def _check_base(self, other: "MappingClassRealization") -> None:
        if self.base.key() != other.base.key() or self.base.labels != other.base.labels:
            raise ValueError("Realizations act on different base triangulations")

    def then(self, other: "MappingClassRealization") -> "MappingClassRealization":
        """The mapping class: first ``self``, then ``other``."""
        self._check_base(other)
        g = other.mapping
        f = self.mapping
        path = other.path + tuple(g[k] for k in self.path)
        relabel = {i: g[f[i]] for i in f}
        moved: Set[str] = set()
        if self.tagflips:
            perm = other.puncture_permutation()
            moved = {perm[p] for p in self.tagflips}
        return MappingClassRealization.create(
            self.base, path, relabel, other.tagflips ^ frozenset(moved)
        )

    def inverse(self) -> "MappingClassRealization":
        inverse_map = {v: k for k, v in self.relabel}
        path = tuple(inverse_map[k] for k in reversed(self.path))
        unmoved: Set[str] = set()
        if self.tagflips:
            perm = self.puncture_permutation()
            unmoved = {src for src, dst in perm.items() if dst in self.tagflips}
        return MappingClassRealization.create(self.base, path, inverse_map, unmoved)

    def power(self, k: int) -> "MappingClassRealization":
        step = self if k >= 0 else self.inverse()
        result = MappingClassRealization.identity(self.base)
        for _ in range(abs(k)):
            result = result.then(step)
        return result

    # ------------------------------------------------------------------------
    # Invariants
    # ------------------------------------------------------------------------

    def puncture_permutation(self) -> Dict[str, str]:
        """Where each marked point of the base goes.

        Raises:
            RuntimeError: If no bijection of marked points matches the arc ends
        """
        start = self.base
        end = self.end_state()
        mapping = self.mapping
        ends_before = {label: [v for v, _ in start.tagged_arc(label).ends] for label in start.labels}
        ends_after = {
            label: [v for v, _ in end.tagged_arc(mapping[label]).ends] for label in start.labels
        }
        vertices = sorted(start.vertices)
        candidates: Dict[str, Set[str]] = {v: set(end.vertices) for v in vertices}
        for label in start.labels:
            for v in ends_before[label]:
                candidates[v] &= set(ends_after[label])
        options = [sorted(candidates[v]) for v in vertices]
        for choice in product(*options):
            if len(set(choice)) != len(choice):
                continue
            assignment = dict(zip(vertices, choice))
            if all(
                sorted(assignment[v] for v in ends_before[label]) == sorted(ends_after[label])
                for label in start.labels
            ):
                return assignment
        raise RuntimeError("No marked-point bijection is compatible with the realization")

    def tropical_signature(self) -> Tuple[Tuple[int, ...], ...]:
        """Image of fixed sample vectors under the tropical y-dynamics of the path."""
        seed = self.base.seed()
        labels = list(seed.labels)
        index = {label: k for k, label in enumerate(labels)}
        mapping = self.mapping
        images = []
        for sample in _realization_samples(len(labels)):
            y = list(sample)
            current = seed
            for label in self.path:
                k = index[label]
                y = _tropical_mutation(y, current.matrix[k], k)
                current = current.mutate(label)
            images.append(tuple(y[index[mapping[label]]] for label in labels))
        return tuple(images)

    def final_notched(self) -> FrozenSet[str]:
        return self.end_state().canonical().notched ^ self.tagflips

    def same_as(self, other: "MappingClassRealization") -> bool:
        self._check_base(other)
        return (
            self.tropical_signature() == other.tropical_signature()
            and self.final_notched() == other.final_notched()
        )

    def is_identity(self) -> bool:
        return self.same_as(MappingClassRealization.identity(self.base))


def realize_compose(
    f: MappingClassRealization, g: MappingClassRealization
) -> MappingClassRealization:
    """f followed by g."""
    return f.then(g)


def infinite_order_witness(
    t: MappingClassRealization, K: int = DEFAULT_TWIST_POWERS
) -> bool:
    """True iff t, t², ..., t^K all differ from the identity."""
    if K < 1:
        raise ValueError(f"Need K >= 1, got {K}")
    current = MappingClassRealization.identity(t.base)
    for k in range(1, K + 1):
        current = current.then(t)
        if current.is_identity():
            logger.debug(f"Realization has order {k}")
            return False
    return True


# ============================================================================
# STOCK REALIZATIONS
# ============================================================================


def annulus_twist(m: int) -> MappingClassRealization:
    """The 1/m twist of the inner boundary of annulus(1, m) as one flip."""
    if m < 1:
        raise ValueError(f"Twist needs m >= 1, got {m}")
    base = annulus(1, m)
    relabel = {"e0": f"e{m}"}
    relabel.update({f"e{k}": f"e{k - 1}" for k in range(1, m + 1)})
    return MappingClassRealization.create(base, ["e0"], relabel)


def annulus_swap(p: int) -> MappingClassRealization:
    """Exchange of the two boundaries of annulus(p, p); no flips needed."""
    if p < 1:
        raise ValueError(f"Swap needs p >= 1, got {p}")
    base = annulus(p, p)
    size = 2 * p
    relabel = {f"e{k}": f"e{(-k) % size}" for k in range(size)}
    return MappingClassRealization.create(base, (), relabel)

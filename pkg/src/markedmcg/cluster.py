"""
Cluster - Exchange matrices, mutation and labelled seeds

Matrix mutation follows the Fomin-Zelevinsky rule. Seeds carry arc labels in a fixed
order; isomorphism of seeds is decided on the weighted quiver with networkx.
"""

from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Union

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match

from .logging_config import get_logger

logger = get_logger(__name__)

MatrixLike = Union[np.ndarray, Sequence[Sequence[int]]]


def as_exchange_matrix(matrix: MatrixLike) -> np.ndarray:
    """Copy into a read-only square integer array.

    Raises:
        ValueError: If the matrix is not square
    """
    B = np.array(matrix, dtype=int)
    if B.size == 0:
        B = B.reshape(0, 0)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError(f"Exchange matrix must be square, got shape {B.shape}")
    B.flags.writeable = False
    return B


def is_skew_symmetrizable(matrix: MatrixLike, symmetrizer: Optional[Sequence[int]] = None) -> bool:
    """True if D·B is skew-symmetric; D defaults to the identity."""
    B = as_exchange_matrix(matrix)
    D = np.diag(symmetrizer if symmetrizer is not None else [1] * B.shape[0])
    DB = D @ B
    return bool(np.array_equal(DB.T, -DB))


def mutate_matrix(matrix: MatrixLike, k: int) -> np.ndarray:
    """Mutate B at the 1-based index k.

    Raises:
        ValueError: If the matrix is not square
        IndexError: If k is out of range
    """
    B = as_exchange_matrix(matrix)
    n = B.shape[0]
    if not 1 <= k <= n:
        raise IndexError(f"Mutation index k={k} out of range 1..{n}")
    k -= 1
    mutated = B.copy()
    mutated.flags.writeable = True
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                mutated[i, j] = -B[i, j]
            elif B[i, k] * B[k, j] > 0:
                sign = 1 if B[i, k] > 0 else -1
                mutated[i, j] = B[i, j] + sign * B[i, k] * B[k, j]
    mutated.flags.writeable = False
    return mutated


def arrow_count(matrix: MatrixLike) -> int:
    """Number of arrows of the quiver of a skew-symmetric matrix."""
    B = as_exchange_matrix(matrix)
    return int(np.clip(B, 0, None).sum())


class Seed(NamedTuple):
    """Arc labels in a fixed order together with their exchange matrix."""

    labels: tuple
    matrix: np.ndarray

    @classmethod
    def create(cls, labels: Iterable[str], matrix: MatrixLike) -> "Seed":
        labels = tuple(labels)
        B = as_exchange_matrix(matrix)
        if len(labels) != B.shape[0]:
            raise ValueError(f"Seed has {len(labels)} labels but a {B.shape[0]}x{B.shape[0]} matrix")
        if len(set(labels)) != len(labels):
            raise ValueError(f"Duplicate seed labels in {labels}")
        return cls(labels, B)

    @classmethod
    def unlabelled(cls, matrix: MatrixLike) -> "Seed":
        B = as_exchange_matrix(matrix)
        return cls.create([str(i) for i in range(1, B.shape[0] + 1)], B)

    def position(self, key: Union[int, str]) -> int:
        """1-based position of a label, or the validated position itself."""
        if isinstance(key, str):
            if key not in self.labels:
                raise KeyError(f"Unknown seed label '{key}'")
            return self.labels.index(key) + 1
        if not 1 <= key <= len(self.labels):
            raise IndexError(f"Mutation index k={key} out of range 1..{len(self.labels)}")
        return key

    def mutate(self, key: Union[int, str]) -> "Seed":
        return Seed(self.labels, mutate_matrix(self.matrix, self.position(key)))

    def entry(self, a: str, b: str) -> int:
        return int(self.matrix[self.labels.index(a), self.labels.index(b)])

    def to_networkx(self) -> nx.DiGraph:
        """Quiver with one edge i -> j per positive entry, weighted by (b_ij, b_ji)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.labels)
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                if self.matrix[i, j] > 0:
                    weight = (int(self.matrix[i, j]), int(self.matrix[j, i]))
                    graph.add_edge(self.labels[i], self.labels[j], weight=weight)
        return graph

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Seed)
            and self.labels == other.labels
            and np.array_equal(self.matrix, other.matrix)
        )

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.labels, self.matrix.tobytes()))


def mutation_path(seed: Seed, ks: Iterable[Union[int, str]]) -> Seed:
    """Apply the mutations left to right."""
    for k in ks:
        seed = seed.mutate(k)
    return seed


def seed_isomorphisms(first: Seed, second: Seed) -> Iterator[Dict[str, str]]:
    """Every relabelling π with B₂[π(i), π(j)] = B₁[i, j]."""
    if len(first.labels) != len(second.labels):
        return
    matcher = DiGraphMatcher(
        first.to_networkx(),
        second.to_networkx(),
        edge_match=categorical_edge_match("weight", None),
    )
    yield from matcher.isomorphisms_iter()


def seed_isomorphic(first: Seed, second: Seed) -> Optional[Dict[str, str]]:
    """One witness relabelling, preferring the identity when it works."""
    if first.labels == second.labels and np.array_equal(first.matrix, second.matrix):
        return {label: label for label in first.labels}
    for mapping in seed_isomorphisms(first, second):
        logger.debug(f"Seed isomorphism found: {mapping}")
        return dict(mapping)
    return None


def relabel_seed(seed: Seed, mapping: Dict[str, str]) -> Seed:
    """The seed whose label mapping[i] plays the role label i played."""
    if sorted(mapping) != sorted(seed.labels) or sorted(mapping.values()) != sorted(seed.labels):
        raise ValueError("Relabelling must be a bijection on the seed labels")
    order: List[str] = list(seed.labels)
    inverse = {v: k for k, v in mapping.items()}
    permuted = [[seed.entry(inverse[a], inverse[b]) for b in order] for a in order]
    return Seed.create(order, permuted)

"""
Words - Free-group words, finite presentations and quotient checks

Words are stored freely reduced as tuples of (generator name, sign) letters. A
Presentation is an ordered list of generator names plus relator words. Quotient
checks work through explicit homomorphic images (permutation groups and free abelian
groups), the Smith normal form of the exponent-sum matrix, and bounded coset
enumeration, all backed by sympy.
"""

import random
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sympy import Matrix, ZZ
from sympy.combinatorics import Permutation
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.matrices.normalforms import invariant_factors

from .constants import DEFAULT_COSET_LIMIT
from .logging_config import get_logger

logger = get_logger(__name__)

Letter = Tuple[str, int]

# Generator roles used in Presentation metadata
ROLE_HALF_TWIST = "half-twist"
ROLE_DEHN_TWIST = "Dehn-twist"
ROLE_BOUNDARY_TWIST = "boundary-twist"
ROLE_ARTIN = "Artin"
ROLE_PERMUTATION = "permutation"


# ============================================================================
# WORDS
# ============================================================================


def free_reduce(
    letters: Iterable[Letter], generators: Optional[Iterable[str]] = None
) -> "Word":
    """Freely reduce a letter sequence.

    Args:
        letters: Sequence of (generator name, sign) pairs, sign in {1, -1}
        generators: Optional set of allowed generator names

    Returns:
        The reduced Word

    Raises:
        KeyError: If a letter references a generator outside ``generators``
        ValueError: If a sign is not +1 or -1
    """
    allowed = set(generators) if generators is not None else None
    stack: List[Letter] = []
    for name, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {sign} for {name}")
        if allowed is not None and name not in allowed:
            raise KeyError(f"Unknown generator '{name}'")
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return Word._from_reduced(tuple(stack))


class Word:
    """An immutable freely reduced word in a free group."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: Tuple[Letter, ...] = free_reduce(letters).letters

    @classmethod
    def _from_reduced(cls, letters: Tuple[Letter, ...]) -> "Word":
        word = cls.__new__(cls)
        word.letters = letters
        return word

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "Word":
        """The word ``name**power``."""
        sign = 1 if power >= 0 else -1
        return cls._from_reduced(tuple((name, sign) for _ in range(abs(power))))

    @classmethod
    def product(cls, words: Iterable["Word"]) -> "Word":
        letters: List[Letter] = []
        for word in words:
            letters.extend(word.letters)
        return free_reduce(letters)

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word._from_reduced(tuple((n, -s) for n, s in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, power: int) -> "Word":
        base = self if power >= 0 else self.inverse()
        return Word.product([base] * abs(power))

    def twist(self) -> "Word":
        """Invert every letter in place (the automorphism induced by a reflection)."""
        return Word._from_reduced(tuple((n, -s) for n, s in self.letters))

    def substitute(self, images: Mapping[str, "Word"]) -> "Word":
        """Replace each generator by a word; generators missing from ``images`` stay."""
        parts = []
        for name, sign in self.letters:
            image = images.get(name, Word.gen(name))
            parts.append(image if sign == 1 else image.inverse())
        return Word.product(parts)

    def exponent_sum(self, name: str) -> int:
        return sum(s for n, s in self.letters if n == name)

    def symbols(self) -> List[str]:
        """Generator names in order of first appearance."""
        seen: Dict[str, None] = {}
        for name, _ in self.letters:
            seen.setdefault(name, None)
        return list(seen)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.to_text() or '1'})"

    def to_text(self, inverse_mark: str = "'") -> str:
        return " ".join(n if s == 1 else f"{n}{inverse_mark}" for n, s in self.letters)


IDENTITY = Word()


def commutator(a: Word, b: Word) -> Word:
    """The word a b a⁻¹ b⁻¹."""
    return a * b * a.inverse() * b.inverse()


def conjugate(w: Word, by: Word) -> Word:
    """The word by · w · by⁻¹."""
    return by * w * by.inverse()


def random_word(
    generators: Sequence[str], length: int, rng: random.Random
) -> Word:
    """Freely reduced word built from ``length`` uniformly drawn letters."""
    if not generators:
        return IDENTITY
    letters = [(rng.choice(generators), rng.choice((1, -1))) for _ in range(length)]
    return free_reduce(letters)


# ============================================================================
# PRESENTATIONS
# ============================================================================


class Presentation:
    """A finite presentation ⟨generators | relators⟩ with per-generator roles.

    ``swaps`` maps a generator to k when it exchanges the quotient points k and
    k+1, as half twists and block permutations do.
    """

    def __init__(
        self,
        generators: Sequence[str],
        relators: Iterable[Word] = (),
        roles: Optional[Mapping[str, str]] = None,
        name: str = "",
        swaps: Optional[Mapping[str, int]] = None,
    ):
        self.generators: List[str] = list(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"Duplicate generator names in {self.generators}")
        self.relators: List[Word] = list(relators)
        self.roles: Dict[str, str] = dict(roles or {})
        self.swaps: Dict[str, int] = dict(swaps or {})
        self.name = name
        self.validate()

    def validate(self) -> None:
        """Check that every relator and swap only uses declared generators.

        Raises:
            ValueError: If a relator or swap references an undeclared symbol
        """
        declared = set(self.generators)
        for symbol in self.swaps:
            if symbol not in declared:
                raise ValueError(f"Swap index given for undeclared generator '{symbol}'")
        for index, relator in enumerate(self.relators):
            for symbol in relator.symbols():
                if symbol not in declared:
                    raise ValueError(
                        f"Relator {index} of {self.name or 'presentation'} "
                        f"uses undeclared generator '{symbol}'"
                    )

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def __repr__(self) -> str:
        return (
            f"Presentation({self.name or '?'}: {len(self.generators)} generators, "
            f"{len(self.relators)} relators)"
        )


# ============================================================================
# HOMOMORPHIC IMAGES
# ============================================================================

Element = Union[Permutation, Tuple[int, ...]]


class PermutationTarget:
    """The symmetric group SymmetricGroup(degree) on {0, ..., degree-1}.

    ``multiply`` composes as functions, so it is ``b * a`` in sympy's
    left-to-right product.
    """

    kind = "permutation"

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError(f"Permutation degree must be positive, got {degree}")
        self.degree = degree
        self.group = SymmetricGroup(degree)

    def identity(self) -> Permutation:
        return self.group.identity

    def multiply(self, a: Permutation, b: Permutation) -> Permutation:
        """a ∘ b: apply b first."""
        return b * a

    def inverse(self, a: Permutation) -> Permutation:
        return ~a

    def check(self, a: object) -> None:
        if not isinstance(a, Permutation) or a.size != self.degree:
            raise ValueError(f"{a} is not a permutation of degree {self.degree}")

    def transposition(self, i: int, j: int) -> Permutation:
        """Transposition of the 1-based points i and j."""
        return Permutation(i - 1, j - 1, size=self.degree)

    def cycle(self, *points: int) -> Permutation:
        """Cycle through the given 1-based points."""
        return Permutation([[p - 1 for p in points]], size=self.degree)


class FreeAbelian:
    """Free abelian group Z^rank with integer vectors as elements."""

    kind = "free-abelian"

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError(f"Rank must be nonnegative, got {rank}")
        self.rank = rank

    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def multiply(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(-x for x in a)

    def check(self, a: Sequence[int]) -> None:
        if len(a) != self.rank:
            raise ValueError(f"{tuple(a)} is not a vector of rank {self.rank}")

    def basis(self, i: int) -> Tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(self.rank))


HomTarget = Union[PermutationTarget, FreeAbelian]


class HomCheck(NamedTuple):
    """Result of checking that generator images define a homomorphism."""

    ok: bool
    relator_index: Optional[int] = None
    image: Optional[Element] = None


def evaluate(word: Word, images: Mapping[str, Element], target: HomTarget) -> Element:
    """Image of ``word`` under the generator assignment ``images``."""
    result = target.identity()
    for name, sign in word:
        image = images[name]
        factor = image if sign == 1 else target.inverse(image)  # type: ignore[arg-type]
        result = target.multiply(result, factor)  # type: ignore[arg-type]
    return result


def verify_homomorphism(
    p: Presentation, images: Mapping[str, Element], target: HomTarget
) -> HomCheck:
    """Check that every relator of ``p`` maps to the identity of ``target``.

    Raises:
        ValueError: If an image is missing or has the wrong degree or rank
    """
    for name in p.generators:
        if name not in images:
            raise ValueError(f"No image given for generator '{name}'")
        target.check(images[name])
    identity = target.identity()
    for index, relator in enumerate(p.relators):
        image = evaluate(relator, images, target)
        if image != identity:
            logger.debug(f"Relator {index} of {p.name} maps to {image}")
            return HomCheck(False, index, image)
    return HomCheck(True)


# ============================================================================
# ABELIANIZATION AND COSET ENUMERATION
# ============================================================================


def exponent_matrix(p: Presentation) -> List[List[int]]:
    """Rows are relators, columns generators, entries exponent sums."""
    return [[rel.exponent_sum(g) for g in p.generators] for rel in p.relators]


def abelianization(p: Presentation) -> List[int]:
    """Elementary divisors of the abelianization; 0 stands for a Z factor."""
    rank = len(p.generators)
    rows = [row for row in exponent_matrix(p) if any(row)]
    if rank == 0:
        return []
    if not rows:
        return [0] * rank
    factors = [abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [f for f in factors if f != 0]
    torsion = sorted(f for f in nonzero if f != 1)
    return torsion + [0] * (rank - len(nonzero))


class Inconclusive(NamedTuple):
    """Coset enumeration stopped before completing."""

    reason: str


def _to_sympy(word: Word, symbols: Mapping[str, object], identity: object) -> object:
    result = identity
    for name, sign in word:
        result = result * symbols[name] ** sign  # type: ignore[operator]
    return result


def todd_coxeter(
    p: Presentation,
    subgroup: Sequence[Word] = (),
    limit: int = DEFAULT_COSET_LIMIT,
) -> Union[int, Inconclusive]:
    """Index of the subgroup generated by ``subgroup`` by HLT coset enumeration.

    Returns:
        The exact index, or Inconclusive when more than ``limit`` cosets are needed
    """
    if limit < 1:
        raise ValueError(f"Coset limit must be positive, got {limit}")
    if not p.generators:
        return 1
    free, *gens = free_group(",".join(f"g{i}" for i in range(len(p.generators))))
    symbols = dict(zip(p.generators, gens))
    relators = [_to_sympy(r, symbols, free.identity) for r in p.relators if r]
    subgroup_gens = [_to_sympy(w, symbols, free.identity) for w in subgroup if w]
    group = FpGroup(free, relators)
    try:
        table = coset_enumeration_r(group, subgroup_gens, max_cosets=limit)
    except ValueError as e:
        logger.debug(f"Coset enumeration for {p.name} stopped: {e}")
        return Inconclusive(f"more than {limit} cosets")
    return len(table.omega)


# ============================================================================
# EXTENSIONS
# ============================================================================


def assemble_extension(
    K: Presentation,
    H: Presentation,
    lifts: Mapping[str, Word],
    w_r: Mapping[Word, Word],
    v: Mapping[Tuple[str, str], Word],
    name: str = "",
) -> Presentation:
    """Presentation of G from a normal subgroup K and the quotient H = G/K.

    The generators are the lifted H-generators followed by the K-generators. The
    relators are r̃·w_r(r)⁻¹ for every H-relator r, x̃·y·x̃⁻¹·v(x, y)⁻¹ for every
    H-generator x and K-generator y, and the relators of K.

    Raises:
        ValueError: If a map is not total or references an unknown symbol
    """
    k_gens = set(K.generators)
    lifted: List[str] = []
    for h_gen in H.generators:
        if h_gen not in lifts:
            raise ValueError(f"No lift given for H-generator '{h_gen}'")
        for symbol in lifts[h_gen].symbols():
            if symbol not in k_gens and symbol not in lifted:
                lifted.append(symbol)

    def over_k(word: Word, what: str) -> Word:
        for symbol in word.symbols():
            if symbol not in k_gens:
                raise ValueError(f"{what} uses '{symbol}', which is not a K-generator")
        return word

    relators: List[Word] = []
    for relator in H.relators:
        if relator not in w_r:
            raise ValueError(f"No kernel word given for H-relator {relator.to_text()}")
        lifted_relator = relator.substitute(lifts)
        relators.append(lifted_relator * over_k(w_r[relator], "w_r").inverse())
    for h_gen in H.generators:
        for k_gen in K.generators:
            if (h_gen, k_gen) not in v:
                raise ValueError(f"No conjugation image for ({h_gen}, {k_gen})")
            lift = lifts[h_gen]
            image = over_k(v[(h_gen, k_gen)], "v")
            relators.append(conjugate(Word.gen(k_gen), lift) * image.inverse())
    relators.extend(K.relators)

    roles = {g: H.roles.get(g, ROLE_ARTIN) for g in lifted}
    roles.update(K.roles)
    swaps = {g: H.swaps[g] for g in lifted if g in H.swaps}
    swaps.update(K.swaps)
    return Presentation(lifted + K.generators, relators, roles, name=name, swaps=swaps)

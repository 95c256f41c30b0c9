"""
Autgroup - Element arithmetic for cluster automorphism groups of marked surfaces

A tagged mapping class is a triple (h, eps, R): a word h in the generators of the
surface's mapping class group presentation, an orientation bit eps and a set R of
punctures whose tags are changed. Triples multiply by

    (h1, e1, R1)(h2, e2, R2) = (h1 · tw^e1(h2), e1 + e2, θ(h2)⁻¹(R1) ⊖ R2)

where tw inverts every generator of a word (conjugation by a reflection) and θ is
the permutation a mapping class induces on the punctures. The printed reading
θ(h2)(R1) is kept behind ``convention="literal"``; it is not associative.

The module also carries the two extra Z₂ factors of the 4-punctured sphere, the
exceptional groups of the once-punctured 4-gon and the twice-punctured digon, and
the group-shape descriptor of every surface with a cluster structure.
"""

import random
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Protocol,
    Sequence,
    Tuple,
)

from sympy.combinatorics import Permutation
from sympy.combinatorics.group_constructs import DirectProduct
from sympy.combinatorics.named_groups import DihedralGroup, SymmetricGroup

from .constants import INVERSE_MARK, RANDOM_WORD_MAX_LENGTH
from .logging_config import get_logger
from .presentations import mcg_presentation, theta_images
from .surface import MarkedSurface, SurfaceClass, SurfaceKind, classify
from .words import (
    IDENTITY,
    PermutationTarget,
    Presentation,
    Word,
    evaluate,
    free_reduce,
    random_word,
)

logger = get_logger(__name__)

CONVENTION_INVERSE = "inverse"
CONVENTION_LITERAL = "literal"
CONVENTIONS = (CONVENTION_INVERSE, CONVENTION_LITERAL)


# ============================================================================
# TAGGED MAPPING CLASSES
# ============================================================================


class TaggedMCGElement(NamedTuple):
    """A tagged mapping class (h, eps, R)."""

    h: Word
    eps: int
    R: FrozenSet[int]

    @classmethod
    def create(
        cls, h: Word = IDENTITY, eps: int = 0, R: Iterable[int] = ()
    ) -> "TaggedMCGElement":
        if eps not in (0, 1):
            raise ValueError(f"Orientation bit must be 0 or 1, got {eps}")
        return cls(h, eps, frozenset(int(p) for p in R))

    def to_dict(self) -> Dict[str, Any]:
        letters = [n if s == 1 else f"{n}{INVERSE_MARK}" for n, s in self.h]
        return {"h": letters, "eps": self.eps, "R": sorted(self.R)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TaggedMCGElement":
        """Inverse of ``to_dict``.

        Raises:
            ValueError: If a key is missing or a field is malformed
        """
        for key in ("h", "eps", "R"):
            if key not in data:
                raise ValueError(f"Tagged element missing required key: {key}")
        letters = []
        for token in data["h"]:
            if not isinstance(token, str) or not token.strip(INVERSE_MARK):
                raise ValueError(f"Malformed letter {token!r}")
            if token.endswith(INVERSE_MARK):
                letters.append((token[: -len(INVERSE_MARK)], -1))
            else:
                letters.append((token, 1))
        return cls.create(free_reduce(letters), int(data["eps"]), data["R"])


def symmetric_difference(a: FrozenSet[int], b: FrozenSet[int]) -> FrozenSet[int]:
    """R1 ⊖ R2 = (R1 ∪ R2) minus (R1 ∩ R2)."""
    return a ^ b


def twist_power(word: Word, eps: int) -> Word:
    """tw^eps(word): letter-wise inversion when eps is 1."""
    return word.twist() if eps % 2 else word


class TaggedMCG:
    """The group (MCG ⋊ Z₂) ⋉ Z₂^P of a marked surface.

    Args:
        presentation: Presentation of the mapping class group
        punctures: Number of punctures; R ranges over subsets of 1..punctures
        degree: Number of points θ permutes (punctures plus boundary components)
        convention: ``"inverse"`` for θ(h2)⁻¹(R1), ``"literal"`` for θ(h2)(R1)
        surface: Surface the presentation belongs to, if known
    """

    def __init__(
        self,
        presentation: Presentation,
        punctures: int,
        degree: Optional[int] = None,
        convention: str = CONVENTION_INVERSE,
        surface: Optional[MarkedSurface] = None,
    ):
        if convention not in CONVENTIONS:
            raise ValueError(
                f"Unknown convention '{convention}', expected one of {CONVENTIONS}"
            )
        if punctures < 0:
            raise ValueError(f"Puncture count must be nonnegative, got {punctures}")
        self.presentation = presentation
        self.punctures = punctures
        self.degree = max(degree or punctures, 1)
        self.convention = convention
        self.surface = surface
        self.permutations = PermutationTarget(self.degree)
        self.images = theta_images(presentation, self.degree)

    @classmethod
    def for_surface(
        cls, s: MarkedSurface, convention: str = CONVENTION_INVERSE
    ) -> "TaggedMCG":
        """Build the group of ``s`` from its mapping class group presentation."""
        p = mcg_presentation(s)
        return cls(p, s.punctures, s.punctures + s.r, convention, surface=s)

    # Checks ---------------------------------------------------------------

    def check(self, x: TaggedMCGElement) -> None:
        """Raise ValueError if ``x`` does not belong to this group."""
        declared = set(self.presentation.generators)
        for symbol in x.h.symbols():
            if symbol not in declared:
                raise ValueError(
                    f"Letter '{symbol}' is not a generator of {self.presentation.name}"
                )
        outside = [p for p in x.R if not 1 <= p <= self.punctures]
        if outside:
            raise ValueError(
                f"Punctures {sorted(outside)} out of range 1..{self.punctures}"
            )
        if x.eps not in (0, 1):
            raise ValueError(f"Orientation bit must be 0 or 1, got {x.eps}")

    # Puncture permutations ------------------------------------------------

    def theta(self, h: Word) -> Permutation:
        """Permutation of punctures and boundary components induced by ``h``."""
        return evaluate(h, self.images, self.permutations)  # type: ignore[return-value]

    def permute(self, perm: Permutation, R: FrozenSet[int]) -> FrozenSet[int]:
        """Image of a set of 1-based punctures under a 0-based permutation."""
        return frozenset(perm(p - 1) + 1 for p in R)

    def _transport(self, h: Word, R: FrozenSet[int]) -> FrozenSet[int]:
        perm = self.theta(h)
        if self.convention == CONVENTION_INVERSE:
            perm = self.permutations.inverse(perm)
        return self.permute(perm, R)

    # Group law ------------------------------------------------------------

    def identity(self) -> TaggedMCGElement:
        return TaggedMCGElement(IDENTITY, 0, frozenset())

    def multiply(self, a: TaggedMCGElement, b: TaggedMCGElement) -> TaggedMCGElement:
        """The product a·b.

        Raises:
            ValueError: If either element does not belong to this group
        """
        self.check(a)
        self.check(b)
        h = a.h * twist_power(b.h, a.eps)
        R = symmetric_difference(self._transport(b.h, a.R), b.R)
        return TaggedMCGElement(h, (a.eps + b.eps) % 2, R)

    def inverse(self, x: TaggedMCGElement) -> TaggedMCGElement:
        """The two-sided inverse (under the inverse convention)."""
        self.check(x)
        h = twist_power(x.h.inverse(), x.eps)
        return TaggedMCGElement(h, x.eps, self._transport(h, x.R))

    def power(self, x: TaggedMCGElement, k: int) -> TaggedMCGElement:
        base = x if k >= 0 else self.inverse(x)
        result = self.identity()
        for _ in range(abs(k)):
            result = self.multiply(result, base)
        return result

    def random_element(
        self, rng: random.Random, max_length: int = RANDOM_WORD_MAX_LENGTH
    ) -> TaggedMCGElement:
        h = random_word(self.presentation.generators, rng.randint(0, max_length), rng)
        R = [p for p in range(1, self.punctures + 1) if rng.random() < 0.5]
        return TaggedMCGElement(h, rng.randint(0, 1), frozenset(R))


def multiply(
    a: TaggedMCGElement, b: TaggedMCGElement, group: TaggedMCG
) -> TaggedMCGElement:
    """Product of two tagged mapping classes of ``group``."""
    return group.multiply(a, b)


# Under θ(h2)(R1), ((a b) c) moves puncture 1 to 3 while (a (b c)) moves it to 2.
LITERAL_COUNTEREXAMPLE: Dict[str, Any] = {
    "surface": {"genus": 0, "punctures": 4, "boundary": []},
    "triple": (
        {"h": [], "eps": 0, "R": [1]},
        {"h": ["s1"], "eps": 0, "R": []},
        {"h": ["s2"], "eps": 0, "R": []},
    ),
}


def literal_counterexample() -> Tuple[TaggedMCG, Tuple[TaggedMCGElement, ...]]:
    """The stored triple on which the literal convention fails associativity."""
    s = MarkedSurface.from_dict(LITERAL_COUNTEREXAMPLE["surface"])
    group = TaggedMCG.for_surface(s, convention=CONVENTION_LITERAL)
    triple = tuple(TaggedMCGElement.from_dict(d) for d in LITERAL_COUNTEREXAMPLE["triple"])
    return group, triple


# ============================================================================
# GROUP AXIOM CHECKS
# ============================================================================


class GroupOps(Protocol):
    def identity(self) -> Any: ...

    def multiply(self, a: Any, b: Any) -> Any: ...

    def inverse(self, a: Any) -> Any: ...


class AxiomViolation(NamedTuple):
    """A failed group axiom together with the elements exhibiting it."""

    axiom: str
    elements: Tuple[Any, ...]


def find_axiom_violation(
    group: GroupOps, triples: Iterable[Sequence[Any]]
) -> Optional[AxiomViolation]:
    """First identity, inverse or associativity failure among ``triples``."""
    e = group.identity()
    for a, b, c in triples:
        if group.multiply(e, a) != a or group.multiply(a, e) != a:
            return AxiomViolation("identity", (a,))
        a_inv = group.inverse(a)
        if group.multiply(a, a_inv) != e or group.multiply(a_inv, a) != e:
            return AxiomViolation("inverse", (a,))
        left = group.multiply(group.multiply(a, b), c)
        right = group.multiply(a, group.multiply(b, c))
        if left != right:
            logger.debug(f"Associativity fails: {left} != {right}")
            return AxiomViolation("associativity", (a, b, c))
    return None


def random_triples(group: Any, rng: random.Random, count: int) -> List[Tuple[Any, ...]]:
    """``count`` triples drawn with ``group.random_element(rng)``."""
    return [
        tuple(group.random_element(rng) for _ in range(3)) for _ in range(count)
    ]


# ============================================================================
# 4-PUNCTURED SPHERE
# ============================================================================


class FourPunctSphereElement(NamedTuple):
    """A tagged mapping class times the swap bit and the mutation-sequence bit."""

    base: TaggedMCGElement
    sigma_bit: int = 0
    mu_bit: int = 0

    def to_dict(self) -> Dict[str, Any]:
        data = self.base.to_dict()
        data.update({"sigma": self.sigma_bit, "mu": self.mu_bit})
        return data


def _require_four_punctured_sphere(group: TaggedMCG) -> None:
    s = group.surface
    if s is None or classify(s).kind is not SurfaceKind.FOUR_PUNCTURED_SPHERE:
        raise ValueError(f"Group of {s} is not the 4-punctured sphere group")


def multiply_fourpunct(
    a: FourPunctSphereElement, b: FourPunctSphereElement, group: TaggedMCG
) -> FourPunctSphereElement:
    """Bits add mod 2; the tagged parts multiply in ``group``."""
    _require_four_punctured_sphere(group)
    return FourPunctSphereElement(
        group.multiply(a.base, b.base),
        (a.sigma_bit + b.sigma_bit) % 2,
        (a.mu_bit + b.mu_bit) % 2,
    )


class FourPunctSphereGroup:
    """Aut of the 4-punctured sphere: the tagged group times Z₂ × Z₂."""

    def __init__(self, convention: str = CONVENTION_INVERSE):
        s = MarkedSurface.create(0, (), 4)
        self.tagged = TaggedMCG.for_surface(s, convention)

    def identity(self) -> FourPunctSphereElement:
        return FourPunctSphereElement(self.tagged.identity())

    def multiply(
        self, a: FourPunctSphereElement, b: FourPunctSphereElement
    ) -> FourPunctSphereElement:
        return multiply_fourpunct(a, b, self.tagged)

    def inverse(self, x: FourPunctSphereElement) -> FourPunctSphereElement:
        return FourPunctSphereElement(self.tagged.inverse(x.base), x.sigma_bit, x.mu_bit)

    def sigma(self) -> FourPunctSphereElement:
        return FourPunctSphereElement(self.tagged.identity(), 1, 0)

    def mu(self) -> FourPunctSphereElement:
        return FourPunctSphereElement(self.tagged.identity(), 0, 1)

    def random_element(self, rng: random.Random) -> FourPunctSphereElement:
        base = self.tagged.random_element(rng)
        return FourPunctSphereElement(base, rng.randint(0, 1), rng.randint(0, 1))


# ============================================================================
# EXCEPTIONAL GROUPS
# ============================================================================


class Di4xSigma3:
    """Dihedral group of order 8 times Σ₃, acting on 4 + 3 points."""

    name = "Di4xSigma3"

    def __init__(self) -> None:
        self.group = DirectProduct(DihedralGroup(4), SymmetricGroup(3))
        self._elements: Optional[List[Permutation]] = None

    def identity(self) -> Permutation:
        return self.group.identity

    def check(self, a: Permutation) -> None:
        if not isinstance(a, Permutation) or a.size != self.group.degree:
            raise ValueError(f"{a!r} is not a permutation of degree {self.group.degree}")
        if not self.group.contains(a):
            raise ValueError(f"{a.array_form} is not an element of {self.name}")

    def multiply(self, a: Permutation, b: Permutation) -> Permutation:
        self.check(a)
        self.check(b)
        return a * b

    def inverse(self, a: Permutation) -> Permutation:
        self.check(a)
        return ~a

    def order(self) -> int:
        return int(self.group.order())

    def elements(self) -> List[Permutation]:
        """All elements by closure under the generators, in a fixed order."""
        if self._elements is None:
            self._elements = sorted(self.group.generate(), key=lambda p: p.array_form)
        return self._elements

    def random_element(self, rng: random.Random) -> Permutation:
        return rng.choice(self.elements())


class ZxS4Element(NamedTuple):
    """(k, s, t) with k in Z, s in S₄ and t in Z₂."""

    k: int
    s: Permutation
    t: int


class ZxS4semiZ2:
    """(Z × S₄) ⋊ Z₂ where t acts by k ↦ -k and by conjugation with (0 1) on S₄."""

    name = "ZxS4semiZ2"

    def __init__(self) -> None:
        self.symmetric = SymmetricGroup(4)
        self.flip = Permutation(0, 1, size=4)
        self._s4: Optional[List[Permutation]] = None

    def identity(self) -> ZxS4Element:
        return ZxS4Element(0, Permutation(3), 0)

    def check(self, a: ZxS4Element) -> None:
        if not isinstance(a.k, int) or a.t not in (0, 1):
            raise ValueError(f"Malformed element {a!r}")
        if not isinstance(a.s, Permutation) or a.s.size != 4:
            raise ValueError(f"{a.s!r} is not a permutation of 4 points")

    def _act(self, t: int, k: int, s: Permutation) -> Tuple[int, Permutation]:
        if t:
            return -k, self.flip * s * self.flip
        return k, s

    def multiply(self, a: ZxS4Element, b: ZxS4Element) -> ZxS4Element:
        self.check(a)
        self.check(b)
        k, s = self._act(a.t, b.k, b.s)
        return ZxS4Element(a.k + k, a.s * s, (a.t + b.t) % 2)

    def inverse(self, a: ZxS4Element) -> ZxS4Element:
        self.check(a)
        k, s = self._act(a.t, -a.k, ~a.s)
        return ZxS4Element(k, s, a.t)

    def order(self) -> Optional[int]:
        """Infinite; reported as None."""
        return None

    def random_element(self, rng: random.Random, bound: int = 5) -> ZxS4Element:
        if self._s4 is None:
            self._s4 = sorted(self.symmetric.generate(), key=lambda p: p.array_form)
        return ZxS4Element(rng.randint(-bound, bound), rng.choice(self._s4), rng.randint(0, 1))


ExceptionalGroup = Any  # Di4xSigma3 | ZxS4semiZ2


def exceptional_group(kind: SurfaceKind) -> ExceptionalGroup:
    """Group services for the once-punctured 4-gon or the twice-punctured digon."""
    if kind is SurfaceKind.ONCE_PUNCTURED_4GON:
        return Di4xSigma3()
    if kind is SurfaceKind.TWICE_PUNCTURED_DIGON:
        return ZxS4semiZ2()
    raise ValueError(f"No exceptional group for {kind.value}")


# ============================================================================
# DESCRIPTOR
# ============================================================================

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _sub(n: int) -> str:
    return str(n).translate(_SUBSCRIPTS)


class AutGroupDescriptor(NamedTuple):
    """Shape of the cluster automorphism group of a surface."""

    surface: MarkedSurface
    surface_class: SurfaceClass
    shape: str
    presentation: Optional[Presentation]
    exceptional: Optional[str] = None

    def format_row(self) -> str:
        return f"{self.surface} | {self.surface_class} | {self.shape}"

    def to_dict(self) -> Dict[str, Any]:
        p = self.presentation
        return {
            "surface": self.surface.to_dict(),
            "class": str(self.surface_class),
            "group": self.shape,
            "mcg": p.name if p is not None else None,
            "exceptional": self.exceptional,
        }


def aut_group_descriptor(s: MarkedSurface) -> AutGroupDescriptor:
    """Describe Aut 𝒜(S,M) and attach the mapping class group presentation.

    Raises:
        ValueError: If the surface is Excluded
    """
    surface_class = classify(s)
    kind = surface_class.kind
    if kind is SurfaceKind.EXCLUDED:
        raise ValueError(f"{s} is Excluded and has no cluster structure")

    tagged = f"(MCG⋊Z₂)⋉Z₂^𝒫{_sub(s.punctures)}"
    exceptional = None
    if kind is SurfaceKind.ONCE_PUNCTURED_CLOSED:
        shape = "MCG ⋊ Z₂"
    elif kind is SurfaceKind.FOUR_PUNCTURED_SPHERE:
        shape = f"{tagged}×Z₂²"
    elif kind is SurfaceKind.ONCE_PUNCTURED_4GON:
        shape, exceptional = "Di₄×Σ₃", Di4xSigma3.name
    elif kind is SurfaceKind.TWICE_PUNCTURED_DIGON:
        shape, exceptional = "Z×S₄⋊Z₂", ZxS4semiZ2.name
    elif kind is SurfaceKind.UNPUNCTURED_ANNULUS:
        p, q = surface_class.params
        shape = f"H_{{{p},{q}}}" + (" ⋊ Z₂" if p == q else "")
    else:
        shape = tagged

    presentation = mcg_presentation(s)
    logger.debug(f"{s}: {shape} with {presentation!r}")
    return AutGroupDescriptor(s, surface_class, shape, presentation, exceptional)

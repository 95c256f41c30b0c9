"""
Presentations - Mapping class group presentations of marked surfaces

Builds braid, pure braid and sphere presentations, the block-permutation group of a
surface, the genus-0 and genus >= 1 presentations of the mapping class group
stabilizing boundaries, the pure mapping class group of a genus-g surface with one
boundary component, and the annulus groups.

Generator naming:
    s<k>      half twists of the genus-0 presentations and braid generators
    v<k>      half twists of the genus >= 1 presentations
    a<i>_<j>  Dehn twists about curves around quotient punctures i and j
    x<i>, y<j>, z  Artin generators of Γ_{g,0,n} and Γ_{g,1,n}
    T<l>      1/m twist about boundary component b_l
    P<k>      generators of the block-permutation group
    r1, r2, t annulus generators
"""

from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from .artin import (
    CoxeterGraph,
    artin_presentation,
    coxeter_graph_g0n,
    coxeter_graph_g1n,
    fundamental_word_for,
)
from .logging_config import get_logger
from .surface import (
    MarkedSurface,
    SurfaceKind,
    boundary_orbits,
    classify,
    index_set_I,
    quotient_label,
)
from .words import (
    IDENTITY,
    ROLE_ARTIN,
    ROLE_BOUNDARY_TWIST,
    ROLE_DEHN_TWIST,
    ROLE_HALF_TWIST,
    ROLE_PERMUTATION,
    FreeAbelian,
    PermutationTarget,
    Presentation,
    Word,
    commutator,
    conjugate,
)

logger = get_logger(__name__)


def _gen(name: str, power: int = 1) -> Word:
    return Word.gen(name, power)


def s_name(k: int) -> str:
    return f"s{k}"


def v_name(k: int) -> str:
    return f"v{k}"


def a_name(i: int, j: int) -> str:
    return f"a{i}_{j}"


def p_name(k: int) -> str:
    return f"P{k}"


def t_name(l: int) -> str:
    return f"T{l}"


def _a(i: int, j: int) -> Word:
    return _gen(a_name(i, j))


def _t(l: int) -> Word:
    return _gen(t_name(l))


def _relation(lhs: Word, rhs: Word) -> Word:
    """The relator lhs·rhs⁻¹ of the relation lhs = rhs."""
    return lhs * rhs.inverse()


def _nonempty(relators: Sequence[Word]) -> List[Word]:
    return [r for r in relators if r]


class GeneratorCatalog(NamedTuple):
    """Generator names of a surface's presentation, grouped by geometric role."""

    half_twists: List[str]
    dehn_twists: List[str]
    boundary_twists: List[str]
    artin: List[str]


# ============================================================================
# BRAIDS AND SPHERES
# ============================================================================


def _braid_relators(name: Callable[[int], str], indices: Sequence[int]) -> List[Word]:
    """Braid and far-commutation relators among the generators with given indices."""
    relators = []
    present = sorted(indices)
    for a_pos, i in enumerate(present):
        for j in present[a_pos + 1 :]:
            x, y = _gen(name(i)), _gen(name(j))
            if j == i + 1:
                relators.append(_relation(x * y * x, y * x * y))
            else:
                relators.append(commutator(x, y))
    return relators


def braid_presentation(n: int) -> Presentation:
    """Artin presentation of the braid group B_n on generators s1..s(n-1)."""
    if n < 2:
        raise ValueError(f"Braid group needs n >= 2, got {n}")
    gens = [s_name(i) for i in range(1, n)]
    relators = _braid_relators(s_name, range(1, n))
    roles = {g: ROLE_HALF_TWIST for g in gens}
    swaps = {s_name(i): i for i in range(1, n)}
    return Presentation(gens, relators, roles, name=f"B{n}", swaps=swaps)


def _pure_braid_relators(n: int) -> List[Word]:
    relators = []
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            for r in range(q + 1, n + 1):
                relators.append(_relation(_a(p, r) * _a(q, r) * _a(p, q), _a(q, r) * _a(p, q) * _a(p, r)))
                relators.append(_relation(_a(q, r) * _a(p, q) * _a(p, r), _a(p, q) * _a(p, r) * _a(q, r)))
                for s in range(r + 1, n + 1):
                    relators.append(commutator(_a(p, q), _a(r, s)))
                    relators.append(commutator(_a(p, s), _a(q, r)))
                    relators.append(commutator(conjugate(_a(p, r), _a(r, s)), _a(q, s)))
    return relators


def pure_braid_presentation(n: int) -> Presentation:
    """Presentation of the pure braid group PB_n on the twists a_ij."""
    if n < 2:
        raise ValueError(f"Pure braid group needs n >= 2, got {n}")
    gens = [a_name(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    roles = {g: ROLE_DEHN_TWIST for g in gens}
    return Presentation(gens, _pure_braid_relators(n), roles, name=f"PB{n}")


def aij_in_braid(i: int, j: int, n: int) -> Word:
    """a_ij = σ_{j-1}⋯σ_{i+1} σ_i² (σ_{j-1}⋯σ_{i+1})⁻¹ as a braid word."""
    if not 1 <= i < j <= n:
        raise ValueError(f"a_ij needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    conjugator = Word([(s_name(k), 1) for k in range(j - 1, i, -1)])
    return conjugate(_gen(s_name(i), 2), conjugator)


def sphere_mcg_presentation(n: int) -> Presentation:
    """Mapping class group of the n-punctured sphere."""
    if n < 2:
        raise ValueError(f"Sphere presentation needs n >= 2, got {n}")
    if n < 4:
        logger.warning(f"Sphere with {n} punctures is below the first feasible case")
    p = braid_presentation(n)
    chain = Word([(s_name(i), 1) for i in range(1, n)])
    p.relators.append(chain**n)
    p.relators.append(chain * chain.twist().inverse())
    p.name = f"Mod(S_0,{n})"
    return p


def _kernel_products(n: int) -> Tuple[Word, Word]:
    """(a_12⋯a_1n)(a_23⋯a_2n)⋯(a_{n-1,n}) and a_12⋯a_1n."""
    full = Word.product(_a(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    first = Word.product(_gen(a_name(1, j)) for j in range(2, n + 1))
    return full, first


def pmod_sphere_presentation(n: int) -> Presentation:
    """Pure mapping class group of the n-punctured sphere."""
    if n < 3:
        raise ValueError(f"Pure sphere presentation needs n >= 3, got {n}")
    p = pure_braid_presentation(n)
    p.relators.extend(_kernel_products(n))
    p.name = f"PMod(S_0,{n})"
    return p


# ============================================================================
# GENUS 0
# ============================================================================


def sigma_S_presentation(s: MarkedSurface) -> Presentation:
    """Block-permutation group Σ_S: generators Per_k for k in I."""
    indices = sorted(index_set_I(s))
    gens = [p_name(k) for k in indices]
    relators = [_gen(g, 2) for g in gens] + _braid_relators(p_name, indices)
    roles = {g: ROLE_PERMUTATION for g in gens}
    swaps = {p_name(k): k for k in indices}
    return Presentation(gens, relators, roles, name=f"Sigma_S {s}", swaps=swaps)


def _conjugation_relators(
    N: int, indices: Sequence[int], half: Callable[[int], str]
) -> List[Word]:
    """How half twists conjugate the twists a_ij."""
    relators = []
    for k in indices:
        sk = _gen(half(k))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                conj = sk.inverse() * _a(i, j) * sk
                if k == i and j == i + 1:
                    relators.append(commutator(_a(i, j), sk))
                elif k == i - 1:
                    relators.append(_relation(conj, _a(i - 1, j)))
                elif k == i:
                    relators.append(
                        _relation(conj, conjugate(_a(i + 1, j), _a(i, i + 1).inverse()))
                    )
                elif k == j - 1:
                    relators.append(_relation(conj, _a(i, j - 1)))
                elif k == j:
                    relators.append(
                        _relation(conj, conjugate(_a(i, j + 1), _a(j, j + 1).inverse()))
                    )
                else:
                    relators.append(commutator(_a(i, j), sk))
    return relators


def _require_genus0(s: MarkedSurface) -> None:
    surface_class = classify(s)
    if s.genus != 0:
        raise ValueError(f"{s} has genus {s.genus}; the genus-0 presentation needs 0")
    if surface_class.kind in (SurfaceKind.UNPUNCTURED_ANNULUS, SurfaceKind.EXCLUDED):
        raise ValueError(f"No genus-0 presentation for {surface_class} surface {s}")


def impi_presentation_genus0(s: MarkedSurface) -> Presentation:
    """Image of the mapping class group in the quotient sphere's mapping class group."""
    _require_genus0(s)
    N = s.punctures + s.r
    indices = sorted(index_set_I(s))
    half = [s_name(k) for k in indices]
    twists = [a_name(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    relators = _braid_relators(s_name, indices)
    # σ_k² = a_{k,k+1}
    relators += [_relation(_gen(s_name(k), 2), _gen(a_name(k, k + 1))) for k in indices]
    relators += _pure_braid_relators(N)
    if N >= 2:
        relators += list(_kernel_products(N))
    relators += _conjugation_relators(N, indices, s_name)
    roles = {g: ROLE_HALF_TWIST for g in half}
    roles.update({g: ROLE_DEHN_TWIST for g in twists})
    swaps = {s_name(k): k for k in indices}
    return Presentation(
        half + twists, _nonempty(relators), roles, name=f"Impi {s}", swaps=swaps
    )


def _boundary_pairs(s: MarkedSurface, k: int) -> Optional[Tuple[int, int]]:
    """Boundary indices (l1, l2) if quotient punctures k, k+1 are both boundaries."""
    first, second = quotient_label(s, k), quotient_label(s, k + 1)
    if first.kind == "boundary" and second.kind == "boundary":
        return first.index, second.index
    return None


def _boundary_twist_relators(
    s: MarkedSurface,
    indices: Sequence[int],
    half: Callable[[int], str],
    others: Sequence[str],
) -> List[Word]:
    relators = []
    for l1 in range(1, s.r + 1):
        for l2 in range(l1 + 1, s.r + 1):
            relators.append(commutator(_t(l1), _t(l2)))
    for l in range(1, s.r + 1):
        relators.extend(commutator(_gen(g), _t(l)) for g in others)
    for k in indices:
        hk = _gen(half(k))
        pair = _boundary_pairs(s, k)
        for l in range(1, s.r + 1):
            if pair and l == pair[0]:
                relators.append(_relation(conjugate(_t(pair[0]), hk), _t(pair[1])))
            elif pair and l == pair[1]:
                relators.append(_relation(conjugate(_t(pair[1]), hk), _t(pair[0])))
            else:
                relators.append(commutator(hk, _t(l)))
    return relators


def mcg_presentation_genus0(s: MarkedSurface) -> Presentation:
    """Mapping class group stabilizing boundaries of a genus-0 marked surface."""
    base = impi_presentation_genus0(s)
    indices = sorted(index_set_I(s))
    boundary = [t_name(l) for l in range(1, s.r + 1)]
    twists = [g for g in base.generators if base.roles[g] == ROLE_DEHN_TWIST]
    relators = base.relators + _boundary_twist_relators(s, indices, s_name, twists)
    roles = dict(base.roles)
    roles.update({g: ROLE_BOUNDARY_TWIST for g in boundary})
    p = Presentation(
        base.generators + boundary, relators, roles, name=f"MCG {s}", swaps=base.swaps
    )
    logger.debug(f"Built {p!r}")
    return p


# ============================================================================
# GENUS >= 1
# ============================================================================


def sij_word(i: int, j: int) -> Word:
    """s_ii = x_i, otherwise s_ij = (y1 x_{i-1} x_j y1) x_{j-1} (y1 x_{i-1} x_j y1)⁻¹."""
    if i < 1 or j < i:
        raise ValueError(f"s_ij needs 1 <= i <= j, got i={i}, j={j}")
    if i == j:
        return _gen(f"x{i}")
    conjugator = Word([("y1", 1), (f"x{i - 1}", 1), (f"x{j}", 1), ("y1", 1)])
    return conjugate(_gen(f"x{j - 1}"), conjugator)


def aij_word_genus(i: int, j: int) -> Word:
    """a_ij = x_{i-1} s_{i+1,j} x_i⁻¹ s_ij⁻¹."""
    if not 1 <= i < j:
        raise ValueError(f"a_ij needs 1 <= i < j, got i={i}, j={j}")
    return (
        _gen(f"x{i - 1}") * sij_word(i + 1, j) * _gen(f"x{i}", -1) * sij_word(i, j).inverse()
    )


class KernelWords(NamedTuple):
    """Words for the twists generating the kernel of capping the boundary."""

    x_n: Word
    x_n_prime: Word
    e: Optional[Word]
    e_prime: Optional[Word]


def kernel_words_g1(g: int, n: int) -> KernelWords:
    """x_n, x_n', and for g = 1 also e and e', as words over Γ_{g,0,n}."""
    if g < 1:
        raise ValueError(f"Kernel words need g >= 1, got {g}")
    graph = coxeter_graph_g0n(g, n)
    vs = [f"v{i}" for i in range(1, n)]
    x_n = IDENTITY
    if n >= 1:
        x_n = _gen("x0", 1 - n) * fundamental_word_for(graph, ["x1"] + vs, 1)
    if g == 1:
        x_n_prime = _gen("x0")
        e = fundamental_word_for(graph, vs, 2)
        e_prime = fundamental_word_for(graph, ["x0", "y1"], 4)
        return KernelWords(x_n, x_n_prime, e, e_prime)
    ys = [f"y{j}" for j in range(2, 2 * g)]
    x_n_prime = _gen("x0", 3 - 2 * g) * fundamental_word_for(graph, ["z"] + ys, 1)
    return KernelWords(x_n, x_n_prime, None, None)


def _delta(graph: CoxeterGraph, names: Sequence[str], power: int) -> Word:
    return fundamental_word_for(graph, names, power)


def _fundamental_blocks(
    graph: CoxeterGraph, g: int, n: int, T: Callable[[int], Word]
) -> List[Word]:
    """Relations between fundamental elements; ``T(i)`` is the twist about puncture i."""
    relators: List[Word] = []
    yz4 = ["y1", "y2", "y3", "z"]
    if g >= 2:
        relators.append(_relation(_delta(graph, yz4, 4), _delta(graph, ["x0"] + yz4, 2)))
    if g >= 3:
        e6 = ["y1", "y2", "y3", "y4", "y5", "z"]
        relators.append(_relation(_delta(graph, e6, 2), _delta(graph, ["x0"] + e6, 1)))
    for i in range(1, n):
        for j in range(0, i):
            triple = [f"x{i + 1}", f"x{j}", "y1"]
            moved = conjugate(_gen(f"x{i}"), _delta(graph, triple, -1))
            for k in range(0, j):
                relators.append(commutator(_gen(f"x{k}"), moved))
            if g >= 2:
                relators.append(commutator(_gen("y2"), moved))
    if g >= 2 and n >= 1:
        relators.append(
            _relation(
                _delta(graph, ["x0", "x1"] + yz4, 1),
                T(1) * _delta(graph, ["x1"] + yz4, 2),
            )
        )
        for i in range(1, n):
            lhs = _delta(graph, [f"x{i}", f"x{i + 1}"] + yz4, 1) * _delta(
                graph, [f"x{i + 1}"] + yz4, -2
            )
            rhs = (
                T(i + 1)
                * _delta(graph, ["x0", f"x{i}", f"x{i + 1}", "y1"], 1)
                * _delta(graph, ["x0", f"x{i + 1}", "y1"], -2)
            )
            relators.append(_relation(lhs, rhs))
    return relators


def pmod_g1_presentation(g: int, n: int) -> Presentation:
    """Pure mapping class group of a genus-g surface with one boundary and n punctures."""
    if g < 1:
        raise ValueError(f"PMod(S_g,1) needs g >= 1, got {g}")
    graph = coxeter_graph_g1n(g, n)
    p = artin_presentation(graph, name=f"PMod(S_{g},1,P_{n})")
    p.relators.extend(_fundamental_blocks(graph, g, n, lambda i: IDENTITY))
    p.validate()
    return p


def _a_prime_vertices(g: int, N: int, indices: Sequence[int]) -> List[str]:
    names = [f"x{i}" for i in range(N + 1)] + [f"y{j}" for j in range(1, 2 * g)]
    if g >= 2:
        names.append("z")
    return names + [v_name(k) for k in indices]


def mcg_presentation_genus_ge1(s: MarkedSurface) -> Presentation:
    """Mapping class group stabilizing boundaries of a marked surface of genus >= 1.

    Raises:
        ValueError: For genus 0, Excluded surfaces, or a Δ-subset of unsupported shape
    """
    if s.genus < 1:
        raise ValueError(f"{s} has genus 0; use the genus-0 presentation")
    if classify(s).kind is SurfaceKind.EXCLUDED:
        raise ValueError(f"{s} is Excluded")
    g, N = s.genus, s.punctures + s.r
    indices = sorted(index_set_I(s))
    graph = coxeter_graph_g0n(g, N)
    vertices = _a_prime_vertices(g, N, indices)
    artin = artin_presentation(graph.induced_subgraph(vertices))
    relators = list(artin.relators)

    def T(i: int) -> Word:
        label = quotient_label(s, i)
        if label.kind == "puncture":
            return IDENTITY
        return _gen(t_name(label.index), label.marks)

    relators += _fundamental_blocks(graph, g, N, T)

    kernel = Word.product(
        aij_word_genus(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)
    )
    s_product = Word.product(sij_word(1, j) for j in range(1, N + 1))
    if g == 1:
        relators.append(_relation(_gen("x0", N), _gen("x0", 1 - N) * s_product * kernel))
        relators.append(_relation(_delta(graph, ["x0", "y1"], 4), kernel))
    else:
        ys = [f"y{j}" for j in range(2, 2 * g)]
        lhs = _gen("x0", 2 - 2 * g + N) * _delta(graph, ["z"] + ys, 1)
        relators.append(_relation(lhs, _gen("x0", 1 - N) * s_product * kernel))
    relators += [_relation(_gen(v_name(i), 2), aij_word_genus(i, i + 1)) for i in indices]

    boundary = [t_name(l) for l in range(1, s.r + 1)]
    others = [v for v in vertices if not v.startswith("v")]
    relators += _boundary_twist_relators(s, indices, v_name, others)

    roles = {v: ROLE_ARTIN for v in vertices}
    roles.update({v_name(k): ROLE_HALF_TWIST for k in indices})
    roles.update({g_: ROLE_BOUNDARY_TWIST for g_ in boundary})
    swaps = {v_name(k): k for k in indices}
    p = Presentation(
        vertices + boundary, _nonempty(relators), roles, name=f"MCG {s}", swaps=swaps
    )
    logger.debug(f"Built {p!r}")
    return p


# ============================================================================
# ANNULUS AND DISPATCH
# ============================================================================


def annulus_presentation(p: int, q: int, with_swap: Optional[bool] = None) -> Presentation:
    """H_{p,q} = ⟨r1, r2 | r1 r2 = r2 r1, r1^p = r2^q⟩, extended by the swap t when p = q."""
    if p < 1 or q < 1:
        raise ValueError(f"Annulus needs p, q >= 1, got p={p}, q={q}")
    if with_swap is None:
        with_swap = p == q
    if with_swap and p != q:
        raise ValueError(f"Boundary swap needs p == q, got p={p}, q={q}")
    r1, r2 = _gen("r1"), _gen("r2")
    gens = ["r1", "r2"]
    relators = [commutator(r1, r2), _relation(_gen("r1", p), _gen("r2", q))]
    roles = {"r1": ROLE_BOUNDARY_TWIST, "r2": ROLE_BOUNDARY_TWIST}
    if with_swap:
        t = _gen("t")
        gens.append("t")
        relators += [_gen("t", 2), _relation(conjugate(r1, t), r2)]
        roles["t"] = ROLE_HALF_TWIST
    return Presentation(gens, relators, roles, name=f"H_{p},{q}" + ("x|Z2" if with_swap else ""))


def mcg_presentation(s: MarkedSurface) -> Presentation:
    """Dispatch to the presentation matching the surface class."""
    surface_class = classify(s)
    if surface_class.kind is SurfaceKind.EXCLUDED:
        raise ValueError(f"{s} is Excluded and has no cluster structure")
    if surface_class.kind is SurfaceKind.UNPUNCTURED_ANNULUS:
        return annulus_presentation(*surface_class.params)
    if s.genus == 0:
        return mcg_presentation_genus0(s)
    return mcg_presentation_genus_ge1(s)


def generator_catalog(p: Presentation) -> GeneratorCatalog:
    by_role: Dict[str, List[str]] = {}
    for g in p.generators:
        by_role.setdefault(p.roles.get(g, ROLE_ARTIN), []).append(g)
    return GeneratorCatalog(
        by_role.get(ROLE_HALF_TWIST, []),
        by_role.get(ROLE_DEHN_TWIST, []),
        by_role.get(ROLE_BOUNDARY_TWIST, []),
        by_role.get(ROLE_ARTIN, []),
    )


# ============================================================================
# HOMOMORPHIC IMAGES
# ============================================================================


def theta_images(p: Presentation, degree: int) -> Dict[str, Permutation]:
    """Permutation images: a generator swapping k and k+1 ↦ (k, k+1), all else ↦ identity."""
    group = PermutationTarget(degree)
    images = {g: group.identity() for g in p.generators}
    for g, k in p.swaps.items():
        images[g] = group.transposition(k, k + 1)
    return images


def braid_images(n: int) -> Dict[str, Word]:
    """s_k ↦ σ_k and a_ij ↦ its braid word in B_n."""
    images = {s_name(k): _gen(s_name(k)) for k in range(1, n)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            images[a_name(i, j)] = aij_in_braid(i, j, n)
    return images


def impi_relators_in_braid(s: MarkedSurface) -> List[Word]:
    """Relators of the genus-0 Im π presentation that hold in B_N, as braid words.

    The two kernel products only vanish on the sphere and are left out.
    """
    p = impi_presentation_genus0(s)
    N = s.punctures + s.r
    kernel = set(_kernel_products(N)) if N >= 2 else set()
    images = braid_images(N)
    return [r.substitute(images) for r in p.relators if r not in kernel]


def boundary_degree_images(p: Presentation, s: MarkedSurface) -> Dict[str, Tuple[int, ...]]:
    """Free-abelian images: T_l ↦ basis vector of b_l's orbit, all else ↦ 0."""
    orbits = [block for block in boundary_orbits(s) if block[0] > s.punctures]
    group = FreeAbelian(len(orbits))
    images = {g: group.identity() for g in p.generators}
    for position, block in enumerate(orbits):
        for quotient_index in block:
            images[t_name(quotient_index - s.punctures)] = group.basis(position)
    return images


class BoundaryImage(NamedTuple):
    """Boundary-twist image of a fundamental-element power under a graph representation."""

    shape: str
    power: int
    image: str
    alternative: Optional[str] = None


# The D(2p) image is printed with a bare b2 factor; both readings are kept.
FUNDAMENTAL_BOUNDARY_TABLE: Tuple[BoundaryImage, ...] = (
    BoundaryImage("A(2p+1)", 2, "T_b1 T_b2"),
    BoundaryImage("A(2p)", 4, "T_b1"),
    BoundaryImage("B(2p)", 1, "T_b1 T_b2"),
    BoundaryImage("B(2p+1)", 2, "T_b1"),
    BoundaryImage("D(2p+1)", 2, "T_b1 T_b2^(2p-1)"),
    BoundaryImage("D(2p)", 1, "T_b1 T_b2 b2^(p-1)", "T_b1 T_b2^p"),
    BoundaryImage("E6", 2, "T_b1"),
    BoundaryImage("E7", 2, "T_b1 T_b2^2"),
    BoundaryImage("B(l) graph", 1, "T_b1^(l-1) T_b2"),
)


def funelmtoboundary_table() -> List[BoundaryImage]:
    """Stored identities only; nothing here is checked against an action."""
    return list(FUNDAMENTAL_BOUNDARY_TABLE)

"""
Tests for the mapping class group presentations and their homomorphic images.
"""

from math import comb, gcd

import pytest

from markedmcg.action import acts_trivially, random_coordinates
from markedmcg.parsing_utils import parse_word
from markedmcg.presentations import (
    a_name,
    aij_in_braid,
    aij_word_genus,
    annulus_presentation,
    boundary_degree_images,
    braid_images,
    braid_presentation,
    funelmtoboundary_table,
    generator_catalog,
    impi_presentation_genus0,
    impi_relators_in_braid,
    kernel_words_g1,
    mcg_presentation,
    pmod_g1_presentation,
    pmod_sphere_presentation,
    pure_braid_presentation,
    sigma_S_presentation,
    sij_word,
    sphere_mcg_presentation,
    theta_images,
)
from markedmcg.surface import MarkedSurface
from markedmcg.words import (
    FreeAbelian,
    PermutationTarget,
    Presentation,
    Word,
    abelianization,
    todd_coxeter,
    verify_homomorphism,
)


def theta_holds(s):
    p = mcg_presentation(s)
    degree = s.punctures + s.r
    return verify_homomorphism(p, theta_images(p, degree), PermutationTarget(degree)).ok


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_braid_presentation_size(n):
    p = braid_presentation(n)
    assert p.generators == [f"s{i}" for i in range(1, n)]
    assert len(p.relators) == comb(n - 1, 2)


def test_braid_presentation_too_small():
    with pytest.raises(ValueError):
        braid_presentation(1)


def test_pure_braid_presentation():
    p = pure_braid_presentation(3)
    assert p.generators == ["a1_2", "a1_3", "a2_3"]
    assert len(p.relators) == 2
    assert abelianization(pure_braid_presentation(4)) == [0] * 6


def test_aij_in_braid():
    assert aij_in_braid(1, 2, 3) == Word.gen("s1", 2)
    assert aij_in_braid(1, 3, 3) == Word([("s2", 1), ("s1", 1), ("s1", 1), ("s2", -1)])
    with pytest.raises(ValueError):
        aij_in_braid(2, 2, 3)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_sphere_abelianization(n):
    assert abelianization(sphere_mcg_presentation(n)) == [gcd(n * (n - 1), 2 * (n - 1))]


def test_sphere_maps_onto_symmetric_group():
    p = sphere_mcg_presentation(5)
    assert verify_homomorphism(p, theta_images(p, 5), PermutationTarget(5)).ok


def test_pmod_sphere_adds_kernel_products():
    assert len(pmod_sphere_presentation(4).relators) == len(
        pure_braid_presentation(4).relators
    ) + 2


def test_sigma_S_presentation_order():
    s = MarkedSurface.create(0, (1, 1), 2)
    p = sigma_S_presentation(s)
    assert p.generators == ["P1", "P3"]
    assert todd_coxeter(p) == 4


def test_generator_catalog_genus0():
    s = MarkedSurface.create(0, (1,), 3)
    catalog = generator_catalog(mcg_presentation(s))
    assert catalog.half_twists == ["s1", "s2"]
    assert catalog.boundary_twists == ["T1"]
    assert len(catalog.dehn_twists) == comb(4, 2)
    assert a_name(1, 4) in catalog.dehn_twists


@pytest.mark.parametrize(
    "genus, boundary, punctures",
    [
        (0, (), 4),
        (0, (), 5),
        (0, (1, 1), 2),
        (0, (1, 2), 1),
        (0, (2,), 2),
        (0, (4,), 1),
        (1, (), 1),
        (1, (), 2),
        (1, (1,), 1),
        (2, (), 1),
    ],
)
def test_theta_kills_relators(genus, boundary, punctures):
    assert theta_holds(MarkedSurface.create(genus, boundary, punctures))


@pytest.mark.parametrize(
    "boundary, punctures",
    [((), 5), ((), 6), ((1, 1), 2), ((2,), 3)],
)
def test_impi_relators_hold_in_braid_group(boundary, punctures, rng):
    s = MarkedSurface.create(0, boundary, punctures)
    samples = random_coordinates(punctures + len(boundary), 20, rng)
    relators = impi_relators_in_braid(s)
    assert len(relators) == len(impi_presentation_genus0(s).relators) - 2
    failing = [r.to_text() for r in relators if not acts_trivially(r, samples)]
    assert failing == []


def test_half_twist_conjugates_twist_by_inverse():
    p = impi_presentation_genus0(MarkedSurface.create(0, (), 5))

    def relator(text):
        return parse_word(text, p.generators)

    assert relator("s1' a1_3 s1 a1_2' a2_3' a1_2") in p.relators
    assert relator("s1' a1_3 s1 a1_2 a2_3' a1_2'") not in p.relators
    assert relator("s3' a1_3 s3 a3_4' a1_4' a3_4") in p.relators


def test_braid_images_expand_twists():
    images = braid_images(4)
    assert images["s2"] == Word.gen("s2")
    assert images[a_name(1, 3)] == aij_in_braid(1, 3, 4)
    assert set(images) == {"s1", "s2", "s3"} | {
        a_name(i, j) for i in range(1, 5) for j in range(i + 1, 5)
    }


def test_theta_images_follow_swaps():
    p = Presentation(["h", "t", "k"], swaps={"h": 2})
    images = theta_images(p, 4)
    group = PermutationTarget(4)
    assert images["h"] == group.transposition(2, 3)
    assert images["t"] == images["k"] == group.identity()
    sigma = sigma_S_presentation(MarkedSurface.create(0, (1, 1), 2))
    assert sigma.swaps == {"P1": 1, "P3": 3}
    annulus = annulus_presentation(2, 2)
    assert theta_images(annulus, 2)["t"] == PermutationTarget(2).identity()


def test_boundary_degree_images():
    s = MarkedSurface.create(0, (1, 1, 2), 1)
    p = mcg_presentation(s)
    images = boundary_degree_images(p, s)
    assert images["T1"] == images["T2"] == (1, 0)
    assert images["T3"] == (0, 1)
    assert images["s2"] == (0, 0)
    assert verify_homomorphism(p, images, FreeAbelian(2)).ok


def test_genus_one_generators():
    p = mcg_presentation(MarkedSurface.create(1, (2,), 1))
    catalog = generator_catalog(p)
    assert catalog.boundary_twists == ["T1"]
    assert "x0" in catalog.artin and "y1" in catalog.artin
    assert catalog.half_twists == []


def test_genus_one_half_twists():
    p = mcg_presentation(MarkedSurface.create(1, (), 3))
    assert generator_catalog(p).half_twists == ["v1", "v2"]


def test_sij_and_aij_words():
    assert sij_word(2, 2) == Word.gen("x2")
    assert sij_word(1, 2).symbols() == ["y1", "x0", "x2", "x1"]
    with pytest.raises(ValueError):
        sij_word(2, 1)
    assert aij_word_genus(1, 2).symbols()[0] == "x0"
    with pytest.raises(ValueError):
        aij_word_genus(2, 2)


def test_kernel_words():
    words = kernel_words_g1(1, 2)
    assert words.x_n_prime == Word.gen("x0")
    assert words.e is not None and words.e_prime is not None
    assert kernel_words_g1(2, 1).e is None
    with pytest.raises(ValueError):
        kernel_words_g1(0, 1)


def test_pmod_g1_presentation_is_valid():
    p = pmod_g1_presentation(1, 2)
    assert p.generators == ["x0", "x1", "x2", "y1"]
    p.validate()


def test_annulus_presentation():
    p = annulus_presentation(2, 3)
    assert p.generators == ["r1", "r2"]
    q = annulus_presentation(2, 2)
    assert q.generators == ["r1", "r2", "t"]
    assert abelianization(p) == [0]
    with pytest.raises(ValueError):
        annulus_presentation(1, 2, with_swap=True)
    with pytest.raises(ValueError):
        annulus_presentation(0, 2)


def test_mcg_presentation_dispatch():
    assert mcg_presentation(MarkedSurface.create(0, (2, 3), 0)).generators == ["r1", "r2"]
    with pytest.raises(ValueError, match="Excluded"):
        mcg_presentation(MarkedSurface.create(0, (), 3))


def test_fundamental_boundary_table():
    rows = {(row.shape, row.power): row for row in funelmtoboundary_table()}
    assert rows[("E7", 2)].image == "T_b1 T_b2^2"
    assert rows[("D(2p)", 1)].alternative == "T_b1 T_b2^p"
    assert rows[("A(2p)", 4)].alternative is None

"""
Tests for the Dynnikov braid action, annulus arcs and flip-path realizations.
"""

import pytest

from markedmcg.action import (
    AnnulusState,
    MappingClassRealization,
    act_word,
    acts_trivially,
    annulus_generator,
    annulus_orbit,
    annulus_swap,
    annulus_twist,
    annulus_word,
    apply_braid_letter,
    infinite_order_witness,
    random_coordinates,
    realize_compose,
    standard_coordinates,
)
from markedmcg.artin import SubgraphType, fundamental_word
from markedmcg.presentations import aij_in_braid, braid_presentation
from markedmcg.triangulation import once_punctured_torus
from markedmcg.words import Word


def braid(text):
    return Word([(t.rstrip("'"), -1 if t.endswith("'") else 1) for t in text.split()])


def test_standard_coordinates():
    assert standard_coordinates(3) == (0, 1, 0, 1, 0, 1)
    with pytest.raises(ValueError):
        standard_coordinates(0)


def test_random_coordinates_range_and_seed(rng):
    samples = random_coordinates(4, 10, rng)
    assert len(samples) == 10
    assert all(len(c) == 8 for c in samples)
    assert all(-20 <= x <= 20 for c in samples for x in c)
    assert random_coordinates(4, 10) == samples


def test_letter_and_inverse_cancel(rng):
    for c in random_coordinates(3, 20, rng):
        for i in (1, 2):
            assert apply_braid_letter(apply_braid_letter(c, i, 1), i, -1) == c
            assert apply_braid_letter(apply_braid_letter(c, i, -1), i, 1) == c


def test_generators_move_standard_curves():
    c = standard_coordinates(4)
    for i in (1, 2, 3):
        assert act_word(Word.gen(f"s{i}"), c) != c


def test_braid_relators_act_trivially(rng):
    for n in (3, 4, 5):
        samples = random_coordinates(n, 30, rng)
        for relator in braid_presentation(n).relators:
            assert acts_trivially(relator, samples)


def test_non_relation_is_detected(rng):
    samples = random_coordinates(3, 30, rng) + [standard_coordinates(3)]
    assert not acts_trivially(braid("s1 s2 s1' s2'"), samples)


def test_act_word_runs_left_to_right(rng):
    u, v = braid("s1 s2'"), braid("s2 s2 s1")
    for c in random_coordinates(3, 10, rng):
        assert act_word(u * v, c) == act_word(v, act_word(u, c))


def test_full_twist_is_central(rng):
    t = SubgraphType("A", 3, ("s1", "s2", "s3"))
    full_twist = fundamental_word(t, 2)
    delta = fundamental_word(t, 1)
    samples = random_coordinates(4, 30, rng)
    assert acts_trivially(delta * delta * full_twist.inverse(), samples)
    for i in (1, 2, 3):
        s = Word.gen(f"s{i}")
        assert acts_trivially(full_twist * s * full_twist.inverse() * s.inverse(), samples)


def test_full_twist_is_product_of_pure_twists(rng):
    samples = random_coordinates(3, 30, rng)
    lhs = braid("s1 s2") ** 3
    rhs = aij_in_braid(1, 2, 3) * aij_in_braid(1, 3, 3) * aij_in_braid(2, 3, 3)
    assert acts_trivially(lhs * rhs.inverse(), samples)


def test_braid_letter_errors():
    with pytest.raises(ValueError):
        apply_braid_letter((0, 1, 0, 1), 2, 1)
    with pytest.raises(ValueError):
        apply_braid_letter((0, 1, 0, 1), 1, 2)
    with pytest.raises(ValueError):
        apply_braid_letter((0, 1, 0), 1, 1)
    with pytest.raises(ValueError):
        act_word(Word.gen("x1"), (0, 1, 0, 1))


# ============================================================================
# Annulus
# ============================================================================


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_annulus_relations_on_zigzag(p, q):
    state = AnnulusState.zigzag(p, q)
    assert annulus_word(state, ["r1", "r2"]) == annulus_word(state, ["r2", "r1"])
    assert annulus_word(state, ["r1"] * p) == annulus_word(state, ["r2"] * q)
    assert annulus_word(state, ["r1", "r1'"]) == state
    assert annulus_word(state, ["r2'", "r2"]) == state


def test_annulus_swap_conjugates_twists():
    for state in annulus_orbit(AnnulusState.zigzag(2, 2), depth=3):
        assert annulus_word(state, ["swap", "r1", "swap"]) == annulus_generator("r2", state)
        assert annulus_word(state, ["swap", "swap"]) == state


def test_annulus_generator_errors():
    state = AnnulusState.zigzag(2, 3)
    with pytest.raises(ValueError):
        annulus_generator("swap", state)
    with pytest.raises(ValueError):
        annulus_generator("r3", state)
    with pytest.raises(ValueError):
        AnnulusState.zigzag(0, 1)


def test_annulus_orbit_grows():
    start = AnnulusState.zigzag(1, 2)
    assert annulus_orbit(start, depth=0) == [start]
    assert len(annulus_orbit(start, depth=2)) > 1


# ============================================================================
# Realizations
# ============================================================================


@pytest.mark.parametrize("m", [1, 2, 3])
def test_annulus_twist_has_infinite_order(m):
    assert infinite_order_witness(annulus_twist(m), 6)


def test_annulus_twist_inverse():
    twist = annulus_twist(2)
    assert realize_compose(twist, twist.inverse()).is_identity()
    assert twist.power(-2).same_as(twist.inverse().power(2))
    assert not twist.is_identity()


def test_annulus_swap_is_an_involution():
    swap = annulus_swap(2)
    assert not swap.is_identity()
    assert swap.power(2).is_identity()


def test_realization_identity():
    base = once_punctured_torus()
    identity = MappingClassRealization.identity(base)
    assert identity.is_identity()
    assert identity.puncture_permutation() == {"P": "P"}


def test_realization_rejects_bad_relabel():
    base = once_punctured_torus()
    with pytest.raises(ValueError):
        MappingClassRealization.create(base, [], {"a": "a"})
    with pytest.raises(ValueError):
        infinite_order_witness(annulus_twist(1), 0)

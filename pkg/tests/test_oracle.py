"""Dense integer statevector reference: exactness and fixtures."""

import random
from fractions import Fraction

import pytest

from helpers import all_graphs, random_graph
from graphstates.bias import DyadicReal
from graphstates.gf2 import mask_of, string_to_mask
from graphstates.graphs import Bipartition, named
from graphstates.oracle import (
    DenseState,
    apply_pauli,
    brute_xchains,
    check_stabilizer,
    dense_overlap,
    dense_schmidt_rank,
    dense_state_z,
    dense_to_x,
    x_distribution,
)
from graphstates.stab import PauliStabilizer, generator, induced_stabilizer


def test_dense_state_z_examples():
    s = dense_state_z(named("empty:1"))
    assert (s.amps, s.scale) == ([1, 1], 1)
    assert sum(1 for a in dense_state_z(named("cycle:3")).amps if a < 0) == 4
    assert sum(1 for a in dense_state_z(named("k4minus1")).amps if a < 0) == 8
    with pytest.raises(ValueError):
        dense_state_z(named("empty:15"))


def test_dense_to_x_point_mass_on_empty_graph():
    for n in (1, 3, 5):
        sx = dense_to_x(dense_state_z(named(f"empty:{n}"))).reduced()
        assert sx.amps[0] != 0
        assert all(a == 0 for a in sx.amps[1:])
        assert (sx.amps[0], sx.scale) == (1, 0)


def test_dense_to_x_k4minus1_support():
    sx = dense_to_x(dense_state_z(named("k4minus1"))).reduced()
    expect = {
        string_to_mask("1000"): 1,
        string_to_mask("0010"): 1,
        string_to_mask("0101"): 1,
        string_to_mask("1111"): -1,
    }
    assert {m: a for m, a in enumerate(sx.amps) if a} == expect
    assert sx.scale == 2


def test_hadamard_involution():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 9))
        s = dense_state_z(g)
        assert dense_to_x(dense_to_x(s)).reduced() == s.reduced()


def test_norm_is_exact_through_transforms():
    rng = random.Random(32)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 10))
        s = dense_state_z(g)
        assert s.norm_squared_is_unit()
        assert dense_to_x(s).norm_squared_is_unit()


def test_check_stabilizer_generators():
    for name in ("star:4", "cycle:5", "house", "bistar", "k4minus1"):
        g = named(name)
        state = dense_state_z(g)
        for v in range(1, g.n + 1):
            gen = generator(g, v)
            assert check_stabilizer(state, gen)
            flipped = PauliStabilizer(gen.width, -gen.phase, gen.x_set, gen.z_set)
            assert not check_stabilizer(state, flipped)


def test_check_stabilizer_whole_group_small():
    for n in range(1, 6):
        for g in list(all_graphs(n))[:: max(1, n)]:
            state = dense_state_z(g)
            for xi in range(1 << n):
                assert check_stabilizer(state, induced_stabilizer(g, xi))


def test_dense_overlap_examples():
    assert dense_overlap(named("cycle:3"), named("empty:3")) == DyadicReal.zero()
    assert dense_overlap(named("house"), named("house")) == DyadicReal(1, 0)
    assert dense_overlap(named("star:3"), named("empty:3")) == DyadicReal(1, 2)
    with pytest.raises(ValueError):
        dense_overlap(named("empty:3"), named("empty:4"))


def test_dense_overlap_symmetric():
    rng = random.Random(33)
    for _ in range(100):
        n = rng.randrange(1, 9)
        g, h = random_graph(rng, n), random_graph(rng, n)
        assert dense_overlap(g, h) == dense_overlap(h, g)


def test_dense_schmidt_rank_examples():
    assert dense_schmidt_rank(named("house"), Bipartition.from_a(5, [1, 2, 3])) == 2
    assert dense_schmidt_rank(named("empty:4"), Bipartition.from_a(4, [1, 2])) == 1
    assert dense_schmidt_rank(named("bistar"), Bipartition.from_a(5, [1, 2, 3])) == 2


def test_brute_xchains_table_fixtures():
    assert brute_xchains(named("star:3")) == {0, mask_of([2, 3])}
    assert brute_xchains(named("star:4")) == {
        0, mask_of([2, 3]), mask_of([2, 4]), mask_of([3, 4]),
    }
    assert brute_xchains(named("complete:3")) == {0, mask_of([1, 2, 3])}


def test_x_distribution_examples():
    got = x_distribution(named("cycle:3"))
    expect = {
        string_to_mask(b): Fraction(1, 4) for b in ("100", "010", "001", "111")
    }
    assert got == expect
    assert x_distribution(named("empty:3")) == {0: Fraction(1)}
    rng = random.Random(34)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 9))
        assert sum(x_distribution(g).values()) == 1


def test_apply_pauli_composition():
    g = named("house")
    s = dense_state_z(g)
    p1 = induced_stabilizer(g, mask_of([1, 4]))
    p2 = induced_stabilizer(g, mask_of([2, 3, 5]))
    once = apply_pauli(apply_pauli(s, p2), p1)
    from graphstates.stab import multiply

    both = apply_pauli(s, multiply(g, p1, p2))
    assert once.amps == both.amps


def test_reduced_is_canonical():
    s = DenseState(1, [2, -2], 3)
    assert s.reduced() == DenseState(1, [1, -1], 1)
    assert dense_state_z(named("empty:2")).reduced() == dense_state_z(named("empty:2"))

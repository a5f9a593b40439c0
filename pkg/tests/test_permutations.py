import itertools
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ytl.permutations import (Composition, CosetSystem, Perm, act_on_character,
                              all_perms, compositions, coset_system, deodhar,
                              embed_word, factor_in_young,
                              simple_transposition_index)


def test_one_line_convention():
    # with right-to-left composition, the word (3, 2, 1) is (4, 1, 2, 3)
    w = Perm.from_word(4, (3, 2, 1))
    assert w == Perm((4, 1, 2, 3))
    assert w.length() == 3
    assert w.reduced_word() == (3, 2, 1)


def test_mul_and_inverse():
    u = Perm((2, 3, 1))
    v = Perm((1, 3, 2))
    assert (u * v)(2) == u(v(2))
    assert (u * u.inv()).is_identity()
    assert u.inv() * u == Perm.identity(3)


@given(st.permutations(list(range(1, 6))))
@settings(max_examples=60, deadline=None)
def test_reduced_word_roundtrip(images):
    w = Perm(tuple(images))
    word = w.reduced_word()
    assert len(word) == w.length()
    assert Perm.from_word(5, word) == w


def test_length_is_inversions():
    assert Perm((4, 3, 2, 1)).length() == 6
    assert Perm.identity(4).length() == 0


def test_descends_right():
    w = Perm((2, 1, 3))
    assert w.descends_right(1)
    assert not w.descends_right(2)


def test_simple_transposition_index():
    assert simple_transposition_index(Perm.transposition(4, 2)) == 2
    assert simple_transposition_index(Perm.identity(4)) is None
    assert simple_transposition_index(Perm((3, 2, 1))) is None


def test_all_perms_sorted():
    perms = all_perms(3)
    assert len(perms) == 6
    assert perms[0].is_identity()
    lengths = [w.length() for w in perms]
    assert lengths == sorted(lengths)


def test_compositions():
    mus = compositions(2, 3)
    assert [m.parts for m in mus] == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert all(m.n == 3 for m in mus)
    assert len(compositions(3, 4)) == 15


def test_composition_structure():
    mu = Composition((1, 3))
    assert mu.j_set() == (2, 3)
    assert mu.m() == 4
    assert mu.block_of(1) == 1 and mu.block_of(4) == 2
    assert len(mu.young_subgroup()) == 6


def test_coset_system():
    sys = coset_system(Composition((1, 3)))
    assert sys.m == 4
    assert sys.rep(1).is_identity()
    assert sys.rep(4) == Perm((4, 1, 2, 3))
    # representatives have minimal length in their coset
    for k in range(1, sys.m + 1):
        pi = sys.rep(k)
        for h in sys.mu.young_subgroup():
            assert (pi * h).length() >= pi.length()


@pytest.mark.parametrize("parts", [(1, 3), (2, 2), (2, 1), (1, 1, 2)])
def test_unique_length_additive_factorization(parts):
    mu = Composition(parts)
    sys = coset_system(mu)
    young = mu.young_subgroup()
    seen = set()
    for pi in sys.reps:
        for x in young:
            w = pi * x
            assert w not in seen
            seen.add(w)
            assert w.length() == pi.length() + x.length()
            assert sys.coset_rep_of(w) == pi
    assert len(seen) == factorial(mu.n)


def test_deodhar_cases():
    sys = coset_system(Composition((1, 3)))
    # conjugating s_2 by pi_4 = s_3 s_2 s_1 descends to s_3 in the subgroup
    l, case = deodhar(sys, 4, 2)
    assert l == 4 and case == ("descend", 3)
    sys22 = coset_system(Composition((2, 2)))
    l, case = deodhar(sys22, 1, 2)
    assert l != 1 and case == ("swap",)


def test_deodhar_exhaustive():
    for parts in [(1, 3), (2, 2), (3, 1), (1, 1, 2)]:
        mu = Composition(parts)
        sys = coset_system(mu)
        for k in range(1, sys.m + 1):
            for i in range(1, mu.n):
                l, case = deodhar(sys, k, i)
                pi_k, pi_l = sys.rep(k), sys.rep(l)
                conj = pi_k.inv() * Perm.transposition(mu.n, i) * pi_l
                if case == ("swap",):
                    assert l != k and conj.is_identity()
                else:
                    assert l == k and case[1] in mu.j_set()
                    assert conj == Perm.transposition(mu.n, case[1])


def test_act_on_character():
    w = Perm.transposition(3, 1)
    assert act_on_character(w, (0, 1, 2)) == (1, 0, 2)
    u = Perm((2, 3, 1))
    vals = ("a", "b", "c")
    moved = act_on_character(u, vals)
    for j in range(1, 4):
        assert moved[u(j) - 1] == vals[j - 1]


def test_factor_in_young():
    mu = Composition((2, 2))
    w = Perm((2, 1, 4, 3))
    parts = factor_in_young(mu, w)
    assert parts == (Perm((2, 1)), Perm((2, 1)))
    with pytest.raises(ValueError):
        factor_in_young(mu, Perm((3, 1, 2, 4)))


def test_embed_word():
    assert embed_word((1, 2), 2) == (3, 4)

import itertools
import random
from fractions import Fraction
from math import factorial

import pytest

from ytl.permutations import Composition, Perm, all_perms, compositions
from ytl.scalars import RatFunc
from ytl import yokonuma as yk


def q(d=1):
    return RatFunc.q(d)


def one(d=1):
    return RatFunc.one(d)


def test_constructors():
    u = yk.unit(2, 2)
    assert u.terms == ((((0, 0), Perm.identity(2)), RatFunc.one(2)),)
    t1 = yk.gen_t(2, 2, 1)
    assert t1.terms[0][0] == ((1, 0), Perm.identity(2))
    g1 = yk.gen_g(2, 2, 1)
    assert g1.terms[0][0] == ((0, 0), Perm.transposition(2, 1))
    with pytest.raises(ValueError):
        yk.gen_g(2, 2, 2)
    with pytest.raises(ValueError):
        yk.gen_t(2, 2, 3)


def test_quadratic_relation_d1():
    x = yk.gen_g(1, 2, 1) * yk.gen_g(1, 2, 1)
    assert x == yk.unit(1, 2).scale(q()) + yk.gen_g(1, 2, 1).scale(q() - one())


def test_quadratic_relation_d2():
    x = yk.gen_g(2, 2, 1) * yk.gen_g(2, 2, 1)
    half = RatFunc.from_scalar(Fraction(1, 2), 2)
    e_part = yk.gen_g(2, 2, 1) + yk.gen_t(2, 2, 1) * yk.gen_t(2, 2, 2) * yk.gen_g(2, 2, 1)
    assert x == yk.unit(2, 2).scale(q(2)) + e_part.scale((q(2) - one(2)) * half)


def test_framing_shift_through_e():
    assert yk.gen_t(3, 2, 1) * yk.e(3, 2, 1) == yk.gen_t(3, 2, 2) * yk.e(3, 2, 1)


@pytest.mark.parametrize("d,n", [(2, 3), (3, 3), (4, 4)])
def test_e_idempotent_and_commutes(d, n):
    for i in range(1, n):
        ei = yk.e(d, n, i)
        gi = yk.gen_g(d, n, i)
        assert ei * ei == ei
        assert ei * gi == gi * ei


@pytest.mark.parametrize("d,n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_defining_relations(d, n):
    g = [yk.gen_g(d, n, i) for i in range(1, n)]
    t = [yk.gen_t(d, n, j) for j in range(1, n + 1)]
    for i in range(n - 2):
        assert g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            assert g[i] * g[j] == g[j] * g[i]
    for a in range(n):
        for b in range(n):
            assert t[a] * t[b] == t[b] * t[a]
    for i in range(1, n):
        for j in range(1, n + 1):
            sj = j + 1 if j == i else (j - 1 if j == i + 1 else j)
            assert t[j - 1] * g[i - 1] == g[i - 1] * t[sj - 1]
        assert g[i - 1] * g[i - 1] == \
            yk.unit(d, n).scale(q(d)) + (yk.e(d, n, i) * g[i - 1]).scale(q(d) - one(d))
    for j in range(n):
        acc = yk.unit(d, n)
        for _ in range(d):
            acc = acc * t[j]
        assert acc == yk.unit(d, n)


def test_gen_g_inverse():
    for d, n in [(1, 3), (2, 3), (3, 3)]:
        for i in range(1, n):
            assert yk.gen_g(d, n, i) * yk.gen_g_inv(d, n, i) == yk.unit(d, n)
            assert yk.gen_g_inv(d, n, i) * yk.gen_g(d, n, i) == yk.unit(d, n)


def test_standard_basis_closure():
    # products of up to 6 generators stay in the d^n * n! span; count it once
    d, n = 2, 3
    assert len(list(itertools.product(range(d), repeat=n))) * factorial(n) == 48
    rng = random.Random(5)
    gens = [yk.gen_g(d, n, i) for i in range(1, n)] + \
           [yk.gen_t(d, n, j) for j in range(1, n + 1)]
    for _ in range(10):
        x = yk.unit(d, n)
        for _ in range(6):
            x = x * gens[rng.randrange(len(gens))]
        for (tmon, w), c in x.terms:
            assert all(0 <= a < d for a in tmon)
            assert w.n == n and not c.is_zero()


@pytest.mark.parametrize("d,n", [(2, 3), (3, 3), (2, 4)])
def test_associativity_random(d, n):
    rng = random.Random(42)
    gens = [yk.gen_g(d, n, i) for i in range(1, n)] + \
           [yk.gen_t(d, n, j) for j in range(1, n + 1)]
    def rand():
        x = yk.unit(d, n)
        for _ in range(2):
            x = x * gens[rng.randrange(len(gens))]
        return x
    for _ in range(50):
        x, y, z = rand(), rand(), rand()
        assert (x * y) * z == x * (y * z)


def test_character_idempotents_complete():
    d, n = 2, 2
    total = yk.zero(d, n)
    chars = list(itertools.product(range(d), repeat=n))
    for c in chars:
        Ec = yk.E_chi(d, n, c)
        assert Ec * Ec == Ec
        total = total + Ec
    assert total == yk.unit(d, n)
    for c1, c2 in itertools.combinations(chars, 2):
        assert (yk.E_chi(d, n, c1) * yk.E_chi(d, n, c2)).is_zero()


def test_character_eigenvalue_and_permutation_action():
    d, n = 2, 3
    for c in itertools.product(range(d), repeat=n):
        Ec = yk.E_chi(d, n, c)
        for j in range(1, n + 1):
            tmon = tuple(1 if m == j - 1 else 0 for m in range(n))
            val = RatFunc.from_scalar(yk.chi_value(d, c, tmon), d)
            assert yk.gen_t(d, n, j) * Ec == Ec.scale(val)
        for w in all_perms(n):
            from ytl.permutations import act_on_character
            gw = yk.g_word(d, n, w.reduced_word())
            moved = yk.E_chi(d, n, act_on_character(w, c))
            assert gw * Ec == moved * gw


def test_projector_selection_rules():
    d, n = 2, 3
    for c in itertools.product(range(d), repeat=n):
        Ec = yk.E_chi(d, n, c)
        for i in range(1, n):
            expected = Ec if c[i - 1] == c[i] else yk.zero(d, n)
            assert yk.e(d, n, i) * Ec == expected
        for j in range(1, n + 1):
            expected = Ec if c[j - 1] == 0 else yk.zero(d, n)
            assert yk.T(d, n, j) * Ec == expected


def test_central_idempotents():
    d, n = 2, 3
    mus = compositions(d, n)
    Emus = {mu: yk.E_mu(d, n, mu) for mu in mus}
    gens = [yk.gen_g(d, n, i) for i in range(1, n)] + \
           [yk.gen_t(d, n, j) for j in range(1, n + 1)]
    total = yk.zero(d, n)
    for mu, Em in Emus.items():
        total = total + Em
        for g in gens:
            assert Em * g == g * Em
    assert total == yk.unit(d, n)
    for mu, nu in itertools.combinations(mus, 2):
        assert (Emus[mu] * Emus[nu]).is_zero()


def test_ideal_generators():
    assert yk.ftl_generator(1, 3) == yk.g_block(1, 3, 1)
    assert yk.ctl_generator(1, 3) == yk.ftl_generator(1, 3)
    with pytest.raises(yk.NTooSmall):
        yk.ftl_generator(2, 2)
    with pytest.raises(yk.NTooSmall):
        yk.ctl_generator(2, 2)
    # d=2, n=3 expansion: (1/4) sum_{a,b} t1^a t2^b t3^{-a-b} g_{1,2}
    f = yk.ftl_generator(2, 3)
    want = yk.zero(2, 3)
    for a in range(2):
        for b in range(2):
            want = want + (yk.gen_t(2, 3, 1, a) * yk.gen_t(2, 3, 2, b)
                           * yk.gen_t(2, 3, 3, -a - b) * yk.g_block(2, 3, 1))
    assert f == want.scale(RatFunc.from_scalar(Fraction(1, 4), 2))


def test_ctl_generator_commutes_with_projector():
    d, n = 2, 3
    core = yk.e(d, n, 1) * yk.e(d, n, 2) * yk.g_block(d, n, 1)
    assert yk.T(d, n, 1) * core == core * yk.T(d, n, 1)


def test_conjugate_shift():
    assert yk.conjugate_shift(yk.g_block(1, 4, 1), 1) == yk.g_block(1, 4, 1)
    assert yk.conjugate_shift(yk.g_block(1, 4, 1), 2) == yk.g_block(1, 4, 2)
    x = yk.e(2, 4, 1) * yk.e(2, 4, 2) * yk.g_block(2, 4, 1)
    shifted = yk.conjugate_shift(x, 2)
    assert shifted == yk.e(2, 4, 2) * yk.e(2, 4, 3) * yk.g_block(2, 4, 2)


def test_specialize_group_algebra():
    d, n = 2, 3
    g1, g2 = yk.gen_g(d, n, 1), yk.gen_g(d, n, 2)
    sq = yk.gen_g(d, n, 1) * yk.gen_g(d, n, 1)
    assert yk.specialize_group_algebra(sq) == yk.specialize_group_algebra(yk.unit(d, n))
    assert yk.specialize_group_algebra(g1 * g2 * g1 - g2 * g1 * g2) == {}
    from ytl.scalars import Cyclotomic
    e1_spec = yk.specialize_group_algebra(yk.e(d, n, 1))
    assert set(e1_spec) == {key for key, _ in yk.e(d, n, 1).terms}
    assert all(v == Cyclotomic.from_rational(Fraction(1, 2), d)
               for v in e1_spec.values())
    rng = random.Random(9)
    gens = [g1, g2, yk.gen_t(d, n, 1), yk.gen_t(d, n, 2), yk.gen_t(d, n, 3)]
    for _ in range(10):
        x = gens[rng.randrange(5)] * gens[rng.randrange(5)]
        y = gens[rng.randrange(5)] * gens[rng.randrange(5)]
        assert yk.specialize_group_algebra(x * y) == yk.group_algebra_mul(
            d, n, yk.specialize_group_algebra(x), yk.specialize_group_algebra(y))


def test_json_roundtrip_shape():
    x = yk.ftl_generator(2, 3)
    data = x.to_json()
    assert all(set(rec) == {"t", "w", "coeff"} for rec in data)
    assert len(data) == x.support_size()

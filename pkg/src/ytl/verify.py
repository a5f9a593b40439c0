"""Machine-verification suites: each suite runs a family of exact identity
checks at a given (d, n) and returns a JSON-able report. All arithmetic is
exact; a single counterexample fails the suite.
"""

from __future__ import annotations

import itertools
import random
from math import factorial

from .linalg import identity_matrix, mat_mul
from .permutations import Perm, all_perms, compositions, coset_system
from .scalars import RatFunc
from .tableaux import (catalan, count_standard_tableaux, dim_CTL, dim_FTL,
                       dim_FTL_bruteforce, dim_CTL_bruteforce, dim_TL, dim_Y,
                       enumerate_d_partitions, enumerate_partitions,
                       jones_pairs, jones_permutation, two_column)
from . import yokonuma as yk
from .reps import (ideal_membership, is_zero_matrix, passes_to_quotient,
                   rep_e, rep_element, rep_g, rep_module, rep_t)
from . import isomaps as iso


def _check(report, name, instances, passed, detail=""):
    report["checks"].append({
        "name": name, "instances": instances, "passed": bool(passed),
        "detail": detail})
    if not passed:
        report["ok"] = False


def _new_report(d, n, suite, seed):
    return {"d": d, "n": n, "suite": suite, "seed": seed,
            "convention_version": 1, "checks": [], "ok": True}


def _random_basis_element(d, n, rng):
    a = tuple(rng.randrange(d) for _ in range(n))
    perms = all_perms(n)
    w = perms[rng.randrange(len(perms))]
    return yk.YElement(d, n, {(a, w): RatFunc.one(d)})


def _random_element(d, n, rng, terms=2):
    out = yk.zero(d, n)
    for _ in range(terms):
        c = RatFunc.from_scalar(rng.randrange(1, 5), d)
        out = out + _random_basis_element(d, n, rng).scale(c)
    return out


# ---------------------------------------------------------------------------
# suites


def suite_dims(d, n, seed=0):
    report = _new_report(d, n, "dims", seed)
    _check(report, "catalan_two_column_sum", n,
           all(dim_TL(m) == sum(count_standard_tableaux((p,)) ** 2
                                for p in enumerate_partitions(m) if two_column(p))
               for m in range(1, n + 1)))
    _check(report, "squared_tableaux_sum", 1,
           sum(count_standard_tableaux(s) ** 2
               for s in enumerate_d_partitions(d, n)) == dim_Y(d, n))
    _check(report, "ftl_formula_vs_bruteforce", 1,
           dim_FTL(d, n) == dim_FTL_bruteforce(d, n))
    _check(report, "ctl_formulas_agree_and_match_bruteforce", 1,
           dim_CTL(d, n) == dim_CTL_bruteforce(d, n))
    return report


def _matrices_equal(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def suite_relations(d, n, seed=0):
    """Defining relations as matrix identities on every irreducible."""
    report = _new_report(d, n, "relations", seed)
    q = RatFunc.q(d)
    one = RatFunc.one(d)
    z = RatFunc.zero(d)
    shapes = enumerate_d_partitions(d, n)
    braid = framing = quad = torsion = diag = hecke = 0
    ok_braid = ok_frame = ok_quad = ok_diag = ok_hecke = True
    for shape in shapes:
        module = rep_module(d, shape)
        if module.dim == 0:
            continue
        ident = identity_matrix(module.dim, z, one)
        G = [rep_g(module, i) for i in range(1, n)]
        Tm = [rep_t(module, j) for j in range(1, n + 1)]
        E = [rep_e(module, i) for i in range(1, n)]
        def mm(a, b):
            return mat_mul(a, b, z)
        for i in range(n - 1):
            for j in range(i + 2, n - 1):
                ok_braid &= _matrices_equal(mm(G[i], G[j]), mm(G[j], G[i])); braid += 1
            if i + 1 < n - 1:
                ok_braid &= _matrices_equal(mm(mm(G[i], G[i + 1]), G[i]),
                                            mm(mm(G[i + 1], G[i]), G[i + 1])); braid += 1
        for a in range(n):
            for b in range(a + 1, n):
                ok_frame &= _matrices_equal(mm(Tm[a], Tm[b]), mm(Tm[b], Tm[a])); framing += 1
        for i in range(1, n):
            for j in range(1, n + 1):
                sj = j + 1 if j == i else (j - 1 if j == i + 1 else j)
                ok_frame &= _matrices_equal(mm(Tm[j - 1], G[i - 1]),
                                            mm(G[i - 1], Tm[sj - 1])); framing += 1
        for j in range(n):
            acc = ident
            for _ in range(d):
                acc = mm(acc, Tm[j])
            ok_frame &= _matrices_equal(acc, ident); torsion += 1
        for i in range(n - 1):
            eg = mm(E[i], G[i])
            rhs = [[(q if r == c else z) + (q - one) * eg[r][c]
                    for c in range(module.dim)] for r in range(module.dim)]
            ok_quad &= _matrices_equal(mm(G[i], G[i]), rhs); quad += 1
            ok_quad &= _matrices_equal(mm(E[i], G[i]), mm(G[i], E[i])); quad += 1
            # e_i through the framing generators matches the projector
            ok_diag &= _matrices_equal(rep_element(module, yk.e(d, n, i + 1)), E[i]); diag += 1
        for j in range(n):
            ok_diag &= all(Tm[j][r][c].is_zero()
                           for r in range(module.dim) for c in range(module.dim)
                           if r != c); diag += 1
        if d == 1:
            # the one-component action must equal the classical Hoefsmit form
            for i in range(n - 1):
                want = _hoefsmit_matrix(module, i + 1)
                ok_hecke &= _matrices_equal(G[i], want); hecke += 1
    _check(report, "braid_relations", braid, ok_braid)
    _check(report, "framing_relations", framing + torsion, ok_frame)
    _check(report, "quadratic_relation", quad, ok_quad)
    _check(report, "diagonal_actions", diag, ok_diag)
    if d == 1:
        _check(report, "hecke_seminormal_match", hecke, ok_hecke)
    return report


def _hoefsmit_matrix(module, i):
    """Classical seminormal matrix from quantum contents only (d=1)."""
    d = module.d
    q = RatFunc.q(d)
    z = RatFunc.zero(d)
    out = [[z for _ in range(module.dim)] for _ in range(module.dim)]
    for col, tab in enumerate(module.basis):
        c_i = RatFunc.q_power(tab.content_exponent(i), d)
        c_next = RatFunc.q_power(tab.content_exponent(i + 1), d)
        denom = (c_next - c_i).inv()
        out[col][col] = (q * c_next - c_next) * denom
        swapped = tab.apply_transposition(i)
        if swapped is not None:
            out[module.index[swapped]][col] = (q * c_next - c_i) * denom
    return out


def suite_idempotents(d, n, seed=0):
    report = _new_report(d, n, "idempotents", seed)
    chars = list(itertools.product(range(d), repeat=n))
    Es = {c: yk.E_chi(d, n, c) for c in chars}
    total = yk.zero(d, n)
    ok_idem = ok_orth = True
    for c, Ec in Es.items():
        total = total + Ec
        ok_idem &= (Ec * Ec == Ec)
    pairs = 0
    for c1, c2 in itertools.combinations(chars, 2):
        ok_orth &= (Es[c1] * Es[c2]).is_zero(); pairs += 1
    _check(report, "character_idempotents", len(chars), ok_idem)
    _check(report, "character_orthogonality", pairs, ok_orth)
    _check(report, "character_completeness", 1, total == yk.unit(d, n))
    gens = [yk.gen_g(d, n, i) for i in range(1, n)] + \
           [yk.gen_t(d, n, j) for j in range(1, n + 1)]
    ok_eig = ok_sel = True
    eig = sel = 0
    for c, Ec in Es.items():
        for j in range(1, n + 1):
            tmon = tuple(1 if m == j - 1 else 0 for m in range(n))
            val = RatFunc.from_scalar(yk.chi_value(d, c, tmon), d)
            ok_eig &= (yk.gen_t(d, n, j) * Ec == Ec.scale(val)); eig += 1
        for i in range(1, n):
            want = Ec if c[i - 1] == c[i] else yk.zero(d, n)
            ok_sel &= (yk.e(d, n, i) * Ec == want); sel += 1
        for j in range(1, n + 1):
            want = Ec if c[j - 1] % d == 0 else yk.zero(d, n)
            ok_sel &= (yk.T(d, n, j) * Ec == want); sel += 1
    _check(report, "framing_eigenvalues", eig, ok_eig)
    _check(report, "projector_selection_rules", sel, ok_sel)
    mus = compositions(d, n)
    Emus = {mu: yk.E_mu(d, n, mu) for mu in mus}
    ok_central = True
    cnt = 0
    for mu, Em in Emus.items():
        for g in gens:
            ok_central &= (Em * g == g * Em); cnt += 1
    _check(report, "central_idempotents_commute", cnt, ok_central)
    s = yk.zero(d, n)
    for Em in Emus.values():
        s = s + Em
    _check(report, "central_idempotents_sum", 1, s == yk.unit(d, n))
    ok_o = True
    cnt = 0
    for mu, nu in itertools.combinations(mus, 2):
        ok_o &= (Emus[mu] * Emus[nu]).is_zero(); cnt += 1
    _check(report, "central_idempotents_orthogonal", cnt, ok_o)
    return report


def suite_quotients(d, n, seed=0):
    report = _new_report(d, n, "quotients", seed)
    shapes = enumerate_d_partitions(d, n)
    ok = True
    for shape in shapes:
        try:
            passes_to_quotient(d, shape, "FTL")
            passes_to_quotient(d, shape, "CTL")
        except AssertionError:
            ok = False
    _check(report, "two_column_vs_annihilation", 2 * len(shapes), ok)
    if n >= 3:
        _check(report, "ftl_generator_in_ideal", 1,
               ideal_membership(yk.ftl_generator(d, n), "FTL"))
        _check(report, "ctl_generator_in_ideal", 1,
               ideal_membership(yk.ctl_generator(d, n), "CTL"))
        _check(report, "ctl_ideal_contains_ftl_generator_image", 1,
               ideal_membership(yk.ctl_generator(d, n), "FTL"))
        _check(report, "unit_not_in_ideal", 2,
               not ideal_membership(yk.unit(d, n), "FTL")
               and not ideal_membership(yk.unit(d, n), "CTL"))
    return report


def suite_iso(d, n, seed=0, hom_pairs=30):
    report = _new_report(d, n, "iso", seed)
    rng = random.Random(seed)
    mus = compositions(d, n)
    report["blocks"] = [[list(mu.parts), coset_system(mu).m] for mu in mus]
    # inverse pair on the full standard basis
    ok_inv = True
    cnt = 0
    for a in itertools.product(range(d), repeat=n):
        for w in all_perms(n):
            x = yk.YElement(d, n, {(a, w): RatFunc.one(d)})
            ok_inv &= (iso.phi_n(iso.psi_n(x)) == x); cnt += 1
    _check(report, "phi_after_psi_identity", cnt, ok_inv)
    # inverse on the matrix side, sampled per block
    ok_mat = True
    cnt = 0
    for mu in mus:
        m = coset_system(mu).m
        young = mu.young_subgroup()
        for _ in range(min(hom_pairs, m * m * len(young))):
            w = young[rng.randrange(len(young))]
            k = rng.randrange(m)
            l = rng.randrange(m)
            hterm = iso.hecke_term(n, w, RatFunc.one(d))
            hmat = [[hterm if (i, j) == (k, l) else yk.zero(1, n)
                     for j in range(m)] for i in range(m)]
            ok_mat &= iso.block_equal(iso.psi_mu(mu, iso.phi_mu(mu, hmat)), hmat)
            cnt += 1
    _check(report, "psi_after_phi_identity", cnt, ok_mat)
    # homomorphism property on random pairs
    ok_hom = True
    cnt = 0
    for mu in mus:
        for _ in range(hom_pairs):
            x = _random_element(d, n, rng)
            y = _random_element(d, n, rng)
            lhs = iso.psi_mu(mu, x * y)
            rhs = iso.block_mat_mul(iso.psi_mu(mu, x), iso.psi_mu(mu, y))
            ok_hom &= iso.block_equal(lhs, rhs); cnt += 1
    _check(report, "homomorphism_property", cnt, ok_hom)
    # integrality is enforced inside psi_mu (NonIntegralExponent would raise)
    _check(report, "integrality_of_images", cnt, True,
           "integer q-exponents asserted during every psi computation")
    # diagonal action of the framing generators on each block
    ok_diag = True
    cnt = 0
    for mu in mus:
        m = coset_system(mu).m
        chars = iso.block_characters(mu)
        for j in range(1, n + 1):
            mat = iso.psi_mu(mu, yk.gen_t(d, n, j))
            tmon = tuple(1 if jj == j - 1 else 0 for jj in range(n))
            for k in range(m):
                for l in range(m):
                    if k != l:
                        ok_diag &= mat[k][l].is_zero()
                want = iso.hecke_term(n, Perm.identity(n),
                                      RatFunc.from_scalar(chars[k].value(d, tmon), d))
                ok_diag &= (mat[k][k] == want)
            cnt += 1
    _check(report, "framing_images_diagonal", cnt, ok_diag)
    if n >= 3:
        _check(report, "ftl_psi_kills_generator", 1,
               iso.blocks_is_zero(iso.ftl_psi(yk.ftl_generator(d, n))))
        _check(report, "ctl_psi_kills_generator", 1,
               iso.blocks_is_zero(iso.ctl_psi(yk.ctl_generator(d, n))))
        # quotient round trips on random standard-basis elements
        ok_rt = True
        cnt = 0
        rounds = 10 if d ** n * factorial(n) > 100 else 20
        for _ in range(rounds):
            x = _random_basis_element(d, n, rng)
            ok_rt &= ideal_membership(iso.ftl_phi(iso.ftl_psi(x)) - x, "FTL")
            ok_rt &= ideal_membership(iso.ctl_phi(iso.ctl_psi(x)) - x, "CTL")
            cnt += 2
        _check(report, "quotient_round_trips_mod_ideal", cnt, ok_rt)
    # basis counts
    _check(report, "ftl_basis_count", 1,
           len(iso.ftl_basis(d, n)) == dim_FTL(d, n))
    _check(report, "ctl_basis_count", 1,
           len(iso.ctl_basis(d, n)) == dim_CTL(d, n))
    return report


def suite_basis(d, n, seed=0):
    report = _new_report(d, n, "basis", seed)
    _check(report, "jones_tl_count", n,
           all(len(jones_pairs(m, "TL")) == catalan(m) for m in range(n + 1)))
    ok_bij = True
    for m in range(1, n + 1):
        perms = {jones_permutation(m, p) for p in jones_pairs(m, "All")}
        ok_bij &= len(perms) == factorial(m)
        ok_bij &= all(jones_permutation(m, p).length() == len(p.word())
                      for p in jones_pairs(m, "All"))
    _check(report, "jones_words_reduced_bijection", n, ok_bij)
    _check(report, "ftl_basis_count", 1, len(iso.ftl_basis(d, n)) == dim_FTL(d, n))
    _check(report, "ctl_basis_count", 1, len(iso.ctl_basis(d, n)) == dim_CTL(d, n))
    return report


SUITES = {
    "dims": suite_dims,
    "relations": suite_relations,
    "idempotents": suite_idempotents,
    "quotients": suite_quotients,
    "iso": suite_iso,
    "basis": suite_basis,
}


def run_suite(d, n, suite, seed=0):
    if suite == "all":
        combined = _new_report(d, n, "all", seed)
        for name, fn in SUITES.items():
            sub = fn(d, n, seed=seed)
            for chk in sub["checks"]:
                chk = dict(chk, name="%s.%s" % (name, chk["name"]))
                combined["checks"].append(chk)
                if not chk["passed"]:
                    combined["ok"] = False
            if "blocks" in sub:
                combined["blocks"] = sub["blocks"]
        return combined
    if suite not in SUITES:
        raise ValueError("unknown suite %r" % suite)
    return SUITES[suite](d, n, seed=seed)

"""Constructive isomorphisms between the framed Hecke algebra and direct
sums of matrix algebras: the block maps psi_mu/phi_mu onto matrices over
Hecke algebras, the Temperley-Lieb reduction rho_reduce in the Jones basis,
the induced quotient isomorphisms ftl_psi/ftl_phi and ctl_psi/ctl_phi, and
the explicit quotient bases.

Matrix blocks are indexed by compositions mu; row/column indices follow the
canonical coset-representative order. Entries of psi images are Hecke
elements, stored as d=1 YElements supported inside the Young subgroup.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import Field, invert_matrix, matrix_rank
from .permutations import (Composition, Perm, act_on_character, compositions,
                           coset_system, embed_word, factor_in_young)
from .scalars import (Cyclotomic, NonIntegralExponent, RatFunc, as_ratfunc,
                      specialize_q)
from .reps import rep_element, rep_module, quotient_shapes, ideal_membership
from .tableaux import (enumerate_partitions, jones_pairs, jones_permutation,
                       jones_word, two_column)
from .yokonuma import (YElement, E_chi, character_exponents, chi_value,
                       staircase_exponents, zero as y_zero)


class SingularReduction(Exception):
    """The Jones-basis linear system was singular (should never happen)."""


# ---------------------------------------------------------------------------
# characters of a block


class CharacterLabel:
    """The k-th character in the block of mu: exps[j-1] is the root index of
    the value at t_j (value = zeta_d ** exps[j-1])."""

    __slots__ = ("mu", "k", "exps")

    def __init__(self, mu, k):
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "exps", character_exponents(mu, k))

    def __setattr__(self, *a):
        raise AttributeError("CharacterLabel is immutable")

    def value(self, d, tmon):
        return chi_value(d, self.exps, tmon)

    def __repr__(self):
        return "CharacterLabel(mu=%r, k=%d, exps=%r)" % (self.mu.parts, self.k, self.exps)


@lru_cache(maxsize=None)
def block_characters(mu):
    return tuple(CharacterLabel(mu, k) for k in range(1, coset_system(mu).m + 1))


@lru_cache(maxsize=None)
def _character_lookup(mu):
    return {c.exps: c.k for c in block_characters(mu)}


# ---------------------------------------------------------------------------
# Hecke elements (d=1 YElements) and matrices of them


def hecke_term(n, w, coeff, order=1):
    return YElement(1, n, {((0,) * n, w): as_ratfunc(coeff, order)})


def hecke_unit(n, order=1):
    return hecke_term(n, Perm.identity(n), RatFunc.one(order))


def _zero_block(n, m):
    z = y_zero(1, n)
    return [[z for _ in range(m)] for _ in range(m)]


def block_mat_mul(a, b):
    m = len(a)
    n = a[0][0].n if m else 0
    out = _zero_block(n, m)
    for i in range(m):
        for k in range(m):
            x = a[i][k]
            if x.is_zero():
                continue
            for j in range(m):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + x * b[k][j]
    return out


def block_equal(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# psi_mu and phi_mu


def psi_tilde_mu(mu, k, w):
    """Image data of the product (k-th idempotent) * g_w before the diagonal
    rescaling: returns (l, half-power scalar, Hecke element)."""
    d = mu.d
    sys = coset_system(mu)
    chars = block_characters(mu)
    target = act_on_character(w.inv(), chars[k - 1].exps)
    l = _character_lookup(mu)[target]
    u = sys.rep(k).inv() * w * sys.rep(l)
    h = w.length() - u.length()
    scalar = RatFunc.q_power(h, d, half=True)
    return l, scalar, hecke_term(w.n, u, RatFunc.one(d))


def psi_mu(mu, x):
    """The block image of x (implicitly of E_mu * x): an m x m matrix of
    Hecke elements supported in the Young subgroup. Entries are guaranteed
    integral in q; a half-integer power raises NonIntegralExponent."""
    d, n = mu.d, mu.n
    if x.d != d or x.n != n:
        raise ValueError("algebra parameter mismatch")
    sys = coset_system(mu)
    m = sys.m
    chars = block_characters(mu)
    lookup = _character_lookup(mu)
    out = _zero_block(n, m)
    for (tmon, w), c in x.terms:
        winv = w.inv()
        for k in range(1, m + 1):
            chi = chars[k - 1]
            target = act_on_character(winv, chi.exps)
            l = lookup[target]
            pi_k, pi_l = sys.rep(k), sys.rep(l)
            u = pi_k.inv() * w * pi_l
            h = w.length() - u.length() + pi_k.length() - pi_l.length()
            if h % 2 != 0:
                raise NonIntegralExponent(
                    "odd half-power at mu=%r, k=%d, w=%r" % (mu.parts, k, w))
            coeff = c * RatFunc.from_scalar(chi.value(d, tmon), d) \
                      * RatFunc.q_power(h // 2, d)
            out[k - 1][l - 1] = out[k - 1][l - 1] + hecke_term(n, u, coeff)
    return out


def _E_chi_times_g(d, n, exps, v, coeff):
    """The element (character idempotent) * coeff * g_v, expanded directly:
    the idempotent is a pure t-polynomial, so each of its monomials just
    pairs with v."""
    base = E_chi(d, n, exps)
    return YElement(d, n, [((tmon, v), c * coeff) for (tmon, _), c in base.terms])


def phi_mu(mu, matrix, verbatim=False):
    """Inverse block map: matrix of Hecke elements (support in the Young
    subgroup) to a YElement. The q-power on each term uses the length of
    pi_k w pi_l^{-1} (the permutation appearing in the image); set
    verbatim=True for the variant using pi_k^{-1} w pi_l instead, which is
    NOT inverse to psi_mu (see tests)."""
    d, n = mu.d, mu.n
    sys = coset_system(mu)
    m = sys.m
    chars = block_characters(mu)
    out = y_zero(d, n)
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            entry = matrix[k - 1][l - 1]
            if entry.is_zero():
                continue
            pi_k, pi_l = sys.rep(k), sys.rep(l)
            for (_, w), c in entry.terms:
                v = pi_k * w * pi_l.inv()
                if verbatim:
                    h = w.length() - (pi_k.inv() * w * pi_l).length()
                else:
                    h = w.length() - v.length()
                # undo the diagonal rescaling, then apply the tilde map
                h += pi_l.length() - pi_k.length()
                if h % 2 != 0:
                    raise NonIntegralExponent(
                        "odd half-power at mu=%r, (k,l)=(%d,%d)" % (mu.parts, k, l))
                coeff = as_ratfunc(c, d) * RatFunc.q_power(h // 2, d)
                out = out + _E_chi_times_g(d, n, chars[k - 1].exps, v, coeff)
    return out


def psi_n(x):
    """Blockwise image over all compositions: {mu: matrix}."""
    return {mu: psi_mu(mu, x) for mu in compositions(x.d, x.n)}


def phi_n(blocks):
    out = None
    for mu, matrix in blocks.items():
        y = phi_mu(mu, matrix)
        out = y if out is None else out + y
    return out


# ---------------------------------------------------------------------------
# Temperley-Lieb reduction in the Jones basis


def _two_column_shapes(m):
    return [(p,) for p in enumerate_partitions(m) if two_column(p)]


def _vectorize_hecke(h, m):
    """Flatten the matrices of h over all two-column irreducibles of H_m."""
    vec = []
    for shape in _two_column_shapes(m):
        mat = rep_element(rep_module(1, shape), h)
        for row in mat:
            vec.extend(row)
    return vec


@lru_cache(maxsize=None)
def _jones_solver(m):
    """Jones pairs of TL_m and the inverse of the vectorized basis matrix."""
    pairs = jones_pairs(m, "TL")
    field = Field(RatFunc.zero(1), RatFunc.one(1), is_zero=lambda x: x.is_zero())
    columns = []
    for p in pairs:
        w = jones_permutation(m, p)
        columns.append(_vectorize_hecke(hecke_term(m, w, RatFunc.one(1)), m))
    size = len(pairs)
    if any(len(col) != size for col in columns):
        raise SingularReduction("vectorized dimension != Catalan number at m=%d" % m)
    matrix = [[columns[j][i] for j in range(size)] for i in range(size)]
    inverse = invert_matrix(matrix, field)
    if inverse is None:
        raise SingularReduction("Jones basis images are dependent at m=%d" % m)
    return pairs, tuple(tuple(r) for r in inverse)


def rho_reduce(h, m=None):
    """Image of a Hecke element in the Temperley-Lieb quotient, as Jones
    coordinates {JonesPair: coeff}."""
    if m is None:
        m = h.n
    pairs, inverse = _jones_solver(m)
    vec = _vectorize_hecke(h, m)
    out = {}
    for i, pair in enumerate(pairs):
        c = None
        for j, v in enumerate(vec):
            if v.is_zero():
                continue
            term = inverse[i][j] * v
            c = term if c is None else c + term
        if c is not None and not c.is_zero():
            out[pair] = c
    return out


@lru_cache(maxsize=None)
def _rho_perm(m, w):
    """Jones coordinates of the basis element G_w of H_m (cached)."""
    return tuple(sorted(rho_reduce(hecke_term(m, w, RatFunc.one(1)), m).items(),
                        key=lambda kv: (kv[0].i, kv[0].k)))


def _flat_hecke(x, index):
    vec = [RatFunc.zero(1)] * len(index)
    for (_, w), c in x.terms:
        vec[index[w]] = c
    return vec


@lru_cache(maxsize=None)
def _bruteforce_solver(m):
    """Square system [Jones columns | ideal-span row basis] inverted once:
    coordinates modulo the ideal read off the first Catalan-many rows."""
    from .permutations import all_perms
    from .yokonuma import g_block
    from .linalg import row_echelon

    field = Field(RatFunc.zero(1), RatFunc.one(1), is_zero=lambda x: x.is_zero())
    perms = all_perms(m)
    index = {w: i for i, w in enumerate(perms)}
    gen = g_block(1, m, 1)
    ideal_rows = []
    for x in perms:
        left = hecke_term(m, x, RatFunc.one(1)) * gen
        for y in perms:
            ideal_rows.append(_flat_hecke(
                left * hecke_term(m, y, RatFunc.one(1)), index))
    reduced, _, rank, _ = row_echelon(ideal_rows, field)
    ideal_basis = reduced[:rank]
    pairs = jones_pairs(m, "TL")
    if rank + len(pairs) != len(perms):
        raise SingularReduction("ideal rank + Catalan != m! at m=%d" % m)
    basis_vecs = [_flat_hecke(hecke_term(m, jones_permutation(m, p), RatFunc.one(1)),
                              index) for p in pairs]
    cols = basis_vecs + ideal_basis
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(perms))]
    inverse = invert_matrix(matrix, field)
    if inverse is None:
        raise SingularReduction("Jones basis not independent mod ideal at m=%d" % m)
    return pairs, index, tuple(tuple(r) for r in inverse)


def rho_bruteforce(h, m):
    """Oracle: reduce h modulo the span of {G_x * G_{1,2} * G_y}: express h
    as Jones combination + ideal element by solving the cached square system."""
    pairs, index, inverse = _bruteforce_solver(m)
    h_vec = _flat_hecke(h, index)
    out = {}
    for i, pair in enumerate(pairs):
        c = None
        for j, v in enumerate(h_vec):
            if v.is_zero():
                continue
            term = inverse[i][j] * v
            c = term if c is None else c + term
        if c is not None and not c.is_zero():
            out[pair] = c
    return out


# ---------------------------------------------------------------------------
# quotient isomorphisms


def _block_offsets(mu):
    return mu.offsets


def _coords_mul(a, b, mul_key):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            for key, scale in mul_key(ka, kb):
                c = ca * cb * scale if scale is not None else ca * cb
                if key in out:
                    c = out[key] + c
                if c.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = c
    return out


def ftl_entry(mu, hecke):
    """Jones-coordinate tensor for one matrix entry: {(b_1..b_d): coeff}."""
    offsets = mu.offsets
    out = {}
    for (_, w), c in hecke.terms:
        locals_ = factor_in_young(mu, w)
        factors = []
        for part, wloc in zip(mu.parts, locals_):
            factors.append(_rho_perm(part, wloc))
        # outer product across tensor factors
        acc = {(): c}
        for coords in factors:
            nxt = {}
            for key, cv in acc.items():
                for pair, pc in coords:
                    k2 = key + (pair,)
                    v = cv * pc
                    if k2 in nxt:
                        v = nxt[k2] + v
                    if not v.is_zero():
                        nxt[k2] = v
                    else:
                        nxt.pop(k2, None)
            acc = nxt
        for key, v in acc.items():
            s = out.get(key)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def ctl_entry(mu, hecke):
    """Mixed tensor for one entry: {(b_1, w_2..w_d): coeff} with only the
    first factor Jones-reduced."""
    out = {}
    for (_, w), c in hecke.terms:
        locals_ = factor_in_young(mu, w)
        rest = tuple(locals_[1:])
        for pair, pc in _rho_perm(mu.parts[0], locals_[0]):
            key = (pair, rest)
            v = c * pc
            if key in out:
                v = out[key] + v
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return out


def _quotient_psi(x, entry_map):
    blocks = {}
    for mu in compositions(x.d, x.n):
        mat = psi_mu(mu, x)
        block = [[entry_map(mu, e) for e in row] for row in mat]
        if any(cell for row in block for cell in row):
            blocks[mu] = block
        else:
            blocks[mu] = block  # keep explicit zero blocks for fixed shape
    return blocks


def ftl_psi(x):
    """Canonical form of x in the framed Temperley-Lieb quotient."""
    return _quotient_psi(x, ftl_entry)


def ctl_psi(x):
    return _quotient_psi(x, ctl_entry)


def ftl_coord_hecke(mu, key, coeff):
    """The Hecke element whose per-factor images have the given Jones
    coordinates: concatenated embedded Jones words form one reduced word."""
    word = []
    for pair, offset in zip(key, mu.offsets):
        word.extend(embed_word(jones_word(pair), offset))
    w = Perm.from_word(mu.n, tuple(word))
    return hecke_term(mu.n, w, coeff)


def ctl_coord_hecke(mu, key, coeff):
    pair, rest = key
    word = list(jones_word(pair))
    for wloc, offset in zip(rest, mu.offsets[1:]):
        word.extend(embed_word(wloc.reduced_word(), offset))
    w = Perm.from_word(mu.n, tuple(word))
    return hecke_term(mu.n, w, coeff)


def _quotient_phi(blocks, coord_hecke):
    out = None
    for mu, block in blocks.items():
        m = len(block)
        hmat = _zero_block(mu.n, m)
        nonzero = False
        for i in range(m):
            for j in range(m):
                for key, c in block[i][j].items():
                    hmat[i][j] = hmat[i][j] + coord_hecke(mu, key, c)
                    nonzero = True
        y = phi_mu(mu, hmat) if nonzero else y_zero(mu.d, mu.n)
        out = y if out is None else out + y
    return out


def ftl_phi(blocks):
    """A preimage in the algebra whose ftl_psi image is the given block
    family (well-defined modulo the defining ideal)."""
    return _quotient_phi(blocks, ftl_coord_hecke)


def ctl_phi(blocks):
    return _quotient_phi(blocks, ctl_coord_hecke)


def blocks_equal(a, b):
    keys = set(a) | set(b)
    for mu in keys:
        ba, bb = a.get(mu), b.get(mu)
        if ba is None or bb is None:
            other = bb if ba is None else ba
            if any(cell for row in other for cell in row):
                return False
            continue
        for ra, rb in zip(ba, bb):
            for x, y in zip(ra, rb):
                if x != y:
                    return False
    return True


def blocks_is_zero(a):
    return all(not cell for block in a.values() for row in block for cell in row)


# ---------------------------------------------------------------------------
# quotient bases


def ftl_basis(d, n):
    """Basis descriptors of the framed Temperley-Lieb quotient: one block
    family per (mu, jones-coordinate tuple, k, l)."""
    import itertools
    out = []
    for mu in compositions(d, n):
        m = coset_system(mu).m
        pair_sets = [jones_pairs(p, "TL") for p in mu.parts]
        for combo in itertools.product(*pair_sets):
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    out.append((mu, combo, k, l))
    return out


def ctl_basis(d, n):
    import itertools
    from .permutations import all_perms
    out = []
    for mu in compositions(d, n):
        m = coset_system(mu).m
        first = jones_pairs(mu.parts[0], "TL")
        rest_sets = [all_perms(p) for p in mu.parts[1:]]
        for b1 in first:
            for rest in itertools.product(*rest_sets):
                for k in range(1, m + 1):
                    for l in range(1, m + 1):
                        out.append((mu, (b1, tuple(rest)), k, l))
    return out


def basis_blocks(descriptor, kind):
    """The DirectSumElement (block family) of one basis descriptor."""
    mu, key, k, l = descriptor
    m = coset_system(mu).m
    block = [[{} for _ in range(m)] for _ in range(m)]
    block[k - 1][l - 1] = {key if kind == "FTL" else key: RatFunc.one(mu.d)}
    return {mu: block}


def basis_element(descriptor, kind):
    """The algebra-side representative of one basis descriptor."""
    mu, key, k, l = descriptor
    m = coset_system(mu).m
    hmat = _zero_block(mu.n, m)
    if kind == "FTL":
        hmat[k - 1][l - 1] = ftl_coord_hecke(mu, key, RatFunc.one(mu.d))
    else:
        hmat[k - 1][l - 1] = ctl_coord_hecke(mu, key, RatFunc.one(mu.d))
    return phi_mu(mu, hmat)


# ---------------------------------------------------------------------------
# rank checks by specialization


def _cyclotomic_field(order):
    return Field(Cyclotomic.zero(order), Cyclotomic.one(order),
                 is_zero=lambda x: x.is_zero())


def vectorize_mod_quotient(x, which, q_value=None):
    """Flatten the representation matrices of x over all shapes that pass to
    the quotient, specializing q to a rational value to keep entries in the
    cyclotomic field."""
    if q_value is None:
        q_value = Cyclotomic.from_rational(5, x.d)
    vec = []
    for shape in quotient_shapes(x.d, x.n, which):
        mat = rep_element(rep_module(x.d, shape), x)
        for row in mat:
            vec.extend(specialize_q(entry, q_value) for entry in row)
    return vec


def independent_mod_quotient(elements, which, d):
    """Rank of the vectorized images equals the element count (full rank at
    the specialization implies generic full rank)."""
    rows = [vectorize_mod_quotient(x, which) for x in elements]
    return matrix_rank(rows, _cyclotomic_field(d)) == len(rows)

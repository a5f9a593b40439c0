"""The symmetric group: permutations, lengths, reduced words, compositions,
Young subgroups, distinguished coset representatives, and Deodhar's lemma.

Permutations are stored in one-line notation (1-based images) and compose
right-to-left: (u * v)(x) = u(v(x)). Under this convention the coset
representative written s_3 s_2 s_1 has one-line notation (4, 1, 2, 3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class Perm:
    """A permutation of {1, ..., n} in one-line notation."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (n, self.images))

    @staticmethod
    def identity(n):
        return Perm(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n, i):
        """The simple transposition s_i = (i, i+1)."""
        if not 1 <= i <= n - 1:
            raise ValueError("generator index %d out of range 1..%d" % (i, n - 1))
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return Perm(tuple(images))

    @staticmethod
    def from_word(n, word):
        """Product s_{i_1} s_{i_2} ... of simple transpositions."""
        w = Perm.identity(n)
        for i in word:
            w = w * Perm.transposition(n, i)
        return w

    @property
    def n(self):
        return len(self.images)

    def __call__(self, j):
        return self.images[j - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Perm(tuple(self.images[other.images[j] - 1] for j in range(self.n)))

    def inv(self):
        images = [0] * self.n
        for j, v in enumerate(self.images, start=1):
            images[v - 1] = j
        return Perm(tuple(images))

    def is_identity(self):
        return all(v == j for j, v in enumerate(self.images, start=1))

    def length(self):
        """Number of inversions = length of any reduced word."""
        count = 0
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.images[a] > self.images[b]:
                    count += 1
        return count

    def reduced_word(self):
        """The lexicographically smallest reduced word for this permutation."""
        word = []
        w = self
        inv = w.inv().images
        while True:
            # smallest left descent: i with w^-1(i) > w^-1(i+1)
            for i in range(1, w.n):
                if inv[i - 1] > inv[i]:
                    break
            else:
                return tuple(word)
            word.append(i)
            w = Perm.transposition(w.n, i) * w
            inv = w.inv().images

    def descends_right(self, i):
        """True iff l(w s_i) < l(w), i.e. w(i) > w(i+1)."""
        return self.images[i - 1] > self.images[i]

    def __repr__(self):
        return "Perm%r" % (self.images,)

    def to_json(self):
        return list(self.images)


def simple_transposition_index(w):
    """If w is some s_j, return j; otherwise None."""
    diff = [j for j in range(1, w.n + 1) if w(j) != j]
    if len(diff) == 2 and diff[1] == diff[0] + 1 and w(diff[0]) == diff[1]:
        return diff[0]
    return None


@lru_cache(maxsize=None)
def all_perms(n):
    """All of S_n, sorted by (length, one-line notation)."""
    perms = [Perm(p) for p in itertools.permutations(range(1, n + 1))]
    perms.sort(key=lambda w: (w.length(), w.images))
    return tuple(perms)


@dataclass(frozen=True)
class Composition:
    """A composition of n with d parts (non-negative, ordered)."""

    parts: tuple

    @property
    def d(self):
        return len(self.parts)

    @property
    def n(self):
        return sum(self.parts)

    @property
    def offsets(self):
        """Start offset of each block: block i covers offsets[i]+1..offsets[i]+parts[i]."""
        out = []
        acc = 0
        for p in self.parts:
            out.append(acc)
            acc += p
        return tuple(out)

    def j_set(self):
        """J^mu: generator indices of the Young subgroup."""
        cuts = set()
        acc = 0
        for p in self.parts[:-1]:
            acc += p
            cuts.add(acc)
        return tuple(i for i in range(1, self.n) if i not in cuts)

    def block_of(self, j):
        """1-based block index containing position j."""
        acc = 0
        for i, p in enumerate(self.parts, start=1):
            acc += p
            if j <= acc:
                return i
        raise ValueError("position %d out of range" % j)

    def m(self):
        """Number of left cosets of the Young subgroup: the multinomial."""
        out = factorial(self.n)
        for p in self.parts:
            out //= factorial(p)
        return out

    def young_subgroup(self):
        """All elements of the Young subgroup S_mu, as permutations of S_n."""
        n = self.n
        blocks = []
        acc = 0
        for p in self.parts:
            blocks.append(list(range(acc + 1, acc + p + 1)))
            acc += p
        out = []
        for pieces in itertools.product(*(itertools.permutations(b) for b in blocks)):
            images = [0] * n
            for block, perm in zip(blocks, pieces):
                for pos, val in zip(block, perm):
                    images[pos - 1] = val
            out.append(Perm(tuple(images)))
        return out

    def to_json(self):
        return list(self.parts)


def compositions(d, n):
    """All compositions of n with d parts, lexicographic from (n,0,...,0) down."""
    if d == 1:
        return [Composition((n,))]
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(d - 1, n - first):
            out.append(Composition((first,) + rest.parts))
    return out


@dataclass(frozen=True)
class CosetSystem:
    """Distinguished (minimal length) left coset representatives of S_n/S_mu,
    sorted by (length, one-line notation), so reps[0] is the identity."""

    mu: Composition
    reps: tuple

    @property
    def m(self):
        return len(self.reps)

    def rep(self, k):
        """The k-th representative, 1-based."""
        return self.reps[k - 1]

    def index_of(self, w):
        """1-based index of a representative."""
        return self._index()[w] + 1

    def _index(self):
        if not hasattr(self, "_index_cache"):
            object.__setattr__(self, "_index_cache",
                               {w: i for i, w in enumerate(self.reps)})
        return self._index_cache

    def coset_rep_of(self, w):
        """The distinguished representative of the coset w S_mu: sort the
        values of w within each block of positions."""
        images = list(w.images)
        acc = 0
        for p in self.mu.parts:
            images[acc:acc + p] = sorted(images[acc:acc + p])
            acc += p
        return Perm(tuple(images))


@lru_cache(maxsize=None)
def coset_system(mu):
    """Build the coset system for a composition (pass a Composition)."""
    n, parts = mu.n, mu.parts
    reps = []
    def build(remaining, chosen):
        if not parts[len(chosen):]:
            images = []
            for block in chosen:
                images.extend(sorted(block))
            reps.append(Perm(tuple(images)))
            return
        size = parts[len(chosen)]
        for block in itertools.combinations(sorted(remaining), size):
            build(remaining - set(block), chosen + [block])
    build(set(range(1, n + 1)), [])
    reps.sort(key=lambda w: (w.length(), w.images))
    assert reps[0].is_identity()
    return CosetSystem(mu, tuple(reps))


def deodhar(sys, k, i):
    """Deodhar's lemma data for (pi_k, s_i): returns (l, case) where case is
    ("swap",) when k != l (then pi_k^-1 s_i pi_l = 1) or ("descend", j) when
    k == l (then pi_k^-1 s_i pi_k = s_j with j in J^mu)."""
    n = sys.mu.n
    s_i = Perm.transposition(n, i)
    pi_k = sys.rep(k)
    target = sys.coset_rep_of(s_i * pi_k)
    l = sys.index_of(target)
    if l != k:
        return l, ("swap",)
    conj = pi_k.inv() * s_i * pi_k
    j = simple_transposition_index(conj)
    if j is None or j not in sys.mu.j_set():
        raise AssertionError("Deodhar's lemma violated at k=%d, i=%d" % (k, i))
    return l, ("descend", j)


def act_on_character(w, values):
    """Permute a character value vector: new[j] = old[w^-1(j)] (1-based j)."""
    winv = w.inv()
    return tuple(values[winv(j) - 1] for j in range(1, w.n + 1))


def factor_in_young(mu, w):
    """Split w in S_mu into its per-block components, each a Perm of S_{mu_i}."""
    out = []
    acc = 0
    for p in mu.parts:
        block = w.images[acc:acc + p]
        if sorted(block) != list(range(acc + 1, acc + p + 1)):
            raise ValueError("%r is not in the Young subgroup of %r" % (w, mu))
        out.append(Perm(tuple(v - acc for v in block)))
        acc += p
    return tuple(out)


def embed_word(word, offset):
    """Shift a generator word by an offset (block embedding)."""
    return tuple(i + offset for i in word)

"""Partitions, d-partitions, standard d-tableaux, admissibility predicates,
Catalan numbers, dimension formulas, and the Jones index sets.

Partitions are tuples of weakly decreasing positive integers; a d-partition
is a tuple of d partitions. A tableau stores, for each entry i, the node
(row, col, component) holding it (rows and columns 1-based).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .permutations import Composition, Perm, compositions


# ---------------------------------------------------------------------------
# partitions


def enumerate_partitions(n):
    """All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1,..,1)."""
    if n == 0:
        return [()]
    out = []
    def build(remaining, maximum, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maximum), 0, -1):
            build(remaining - part, part, prefix + [part])
    build(n, n, [])
    return out


def enumerate_d_partitions(d, n):
    """All d-partitions of n: composition-major, reverse-lex in each slot."""
    out = []
    for mu in compositions(d, n):
        for combo in itertools.product(*(enumerate_partitions(p) for p in mu.parts)):
            out.append(tuple(combo))
    return out


def d_partition_size(shape):
    return sum(sum(comp) for comp in shape)


def size_composition(shape):
    """The composition (|lambda^(1)|, ..., |lambda^(d)|) of a d-partition."""
    return Composition(tuple(sum(comp) for comp in shape))


def two_column(partition):
    """True iff the Young diagram has at most two columns."""
    return not partition or partition[0] <= 2


def ftl_admissible(shape):
    """Every component has at most two columns."""
    return all(two_column(comp) for comp in shape)


def ctl_admissible(shape):
    """The first component has at most two columns."""
    return two_column(shape[0])


# ---------------------------------------------------------------------------
# standard d-tableaux


@dataclass(frozen=True)
class DTableau:
    """A d-tableau: placement[i-1] = (row, col, component) of entry i."""

    shape: tuple
    placement: tuple

    @property
    def n(self):
        return len(self.placement)

    def position(self, i):
        """Component index holding entry i."""
        return self.placement[i - 1][2]

    def content_exponent(self, i):
        """col - row of the node holding entry i (quantum content is q^this)."""
        x, y, _ = self.placement[i - 1]
        return y - x

    def entry_grid(self):
        """Entries laid out per component, as nested lists."""
        grids = [[[0] * row for row in comp] for comp in self.shape]
        for i, (x, y, k) in enumerate(self.placement, start=1):
            grids[k - 1][x - 1][y - 1] = i
        return grids

    def is_standard(self):
        for grid in self.entry_grid():
            for r, row in enumerate(grid):
                for c, v in enumerate(row):
                    if c + 1 < len(row) and row[c + 1] < v:
                        return False
                    if r + 1 < len(grid) and c < len(grid[r + 1]) and grid[r + 1][c] < v:
                        return False
        return True

    def apply_transposition(self, i):
        """Swap entries i and i+1; returns None when the result is not standard
        (consumers treat that as the zero vector)."""
        placement = list(self.placement)
        placement[i - 1], placement[i] = placement[i], placement[i - 1]
        swapped = DTableau(self.shape, tuple(placement))
        return swapped if swapped.is_standard() else None

    def apply_permutation(self, sigma):
        """The tableau T^sigma; may be non-standard."""
        placement = [None] * self.n
        for i in range(1, self.n + 1):
            placement[sigma(i) - 1] = self.placement[i - 1]
        return DTableau(self.shape, tuple(placement))

    def __repr__(self):
        return "DTableau(%r)" % (self.entry_grid(),)

    def to_json(self):
        return [[x, y, k, i] for i, (x, y, k) in enumerate(self.placement, start=1)]


@lru_cache(maxsize=None)
def standard_tableaux(shape):
    """All standard d-tableaux of a given shape, in insertion-sequence
    lexicographic order (candidate nodes ordered by (component, row))."""
    n = d_partition_size(shape)
    results = []

    def addable_nodes(filled):
        # filled: per component, tuple of current row lengths
        nodes = []
        for k, comp in enumerate(shape, start=1):
            rows = filled[k - 1]
            for r, target in enumerate(comp, start=1):
                cur = rows[r - 1]
                if cur < target and (r == 1 or rows[r - 2] > cur):
                    nodes.append((r, cur + 1, k))
        return nodes

    def build(entry, filled, placement):
        if entry > n:
            results.append(DTableau(shape, tuple(placement)))
            return
        for (r, c, k) in sorted(addable_nodes(filled), key=lambda t: (t[2], t[0])):
            rows = list(filled[k - 1])
            rows[r - 1] += 1
            build(entry + 1,
                  filled[: k - 1] + (tuple(rows),) + filled[k:],
                  placement + [(r, c, k)])

    build(1, tuple(tuple(0 for _ in comp) for comp in shape), [])
    return tuple(results)


def count_standard_tableaux(shape):
    return len(standard_tableaux(shape))


# ---------------------------------------------------------------------------
# dimension formulas


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def dim_TL(n):
    return catalan(n)


def dim_Y(d, n):
    return d ** n * factorial(n)


def multinomial(mu):
    out = factorial(sum(mu))
    for p in mu:
        out //= factorial(p)
    return out


def dim_FTL(d, n):
    total = 0
    for mu in compositions(d, n):
        prod = 1
        for p in mu.parts:
            prod *= catalan(p)
        total += multinomial(mu.parts) ** 2 * prod
    return total


def dim_CTL(d, n):
    """Catalan/derangement-style sum; computed by both published formulas
    and asserted equal."""
    by_k = sum(comb(n, k) ** 2 * catalan(k) * (d - 1) ** (n - k) * factorial(n - k)
               for k in range(n + 1))
    by_comp = 0
    for mu in compositions(d, n):
        rest = 1
        for p in mu.parts[1:]:
            rest *= factorial(p)
        by_comp += multinomial(mu.parts) ** 2 * catalan(mu.parts[0]) * rest
    assert by_k == by_comp, "the two CTL dimension formulas disagree"
    return by_k


def dim_FTL_bruteforce(d, n):
    """Sum of squared standard-tableau counts over admissible shapes."""
    return sum(count_standard_tableaux(s) ** 2
               for s in enumerate_d_partitions(d, n) if ftl_admissible(s))


def dim_CTL_bruteforce(d, n):
    return sum(count_standard_tableaux(s) ** 2
               for s in enumerate_d_partitions(d, n) if ctl_admissible(s))


# ---------------------------------------------------------------------------
# Jones index sets


@dataclass(frozen=True)
class JonesPair:
    """A pair of tuples (i_1<...<i_p; k_1,...,k_p) indexing a product of
    descending generator runs."""

    i: tuple
    k: tuple

    def word(self):
        """Concatenated descending runs (i_j, i_j - 1, ..., i_j - k_j)."""
        out = []
        for ij, kj in zip(self.i, self.k):
            out.extend(range(ij, ij - kj - 1, -1))
        return tuple(out)

    def to_json(self):
        return {"i": list(self.i), "k": list(self.k)}


def jones_pairs(n, mode="TL"):
    """Enumerate the index pairs: mode='All' gives the set bijective with S_n
    (count n!), mode='TL' the Temperley-Lieb subset (count C_n)."""
    if mode not in ("All", "TL"):
        raise ValueError("mode must be 'All' or 'TL'")
    out = [JonesPair((), ())]
    def build(start, mins, prefix_i, prefix_k):
        for i1 in range(start, n):
            if mode == "TL":
                krange = range(0, i1 - mins)
            else:
                krange = range(0, i1)
            for k1 in krange:
                pair_i = prefix_i + (i1,)
                pair_k = prefix_k + (k1,)
                out.append(JonesPair(pair_i, pair_k))
                build(i1 + 1, (i1 - k1) if mode == "TL" else mins, pair_i, pair_k)
    build(1, 0, (), ())
    out.sort(key=lambda p: (len(p.i), p.i, p.k))
    return out


def jones_word(pair):
    return pair.word()


def jones_permutation(n, pair):
    """The permutation whose standard-basis word is the pair's word."""
    return Perm.from_word(n, pair.word())

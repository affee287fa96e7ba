"""t-partite partitions, shuffles, residue vectors and the diagonal-invariant basis index set.

A multi-exponent ``f`` is a tuple of ``t`` rows, each a tuple of ``n``
naturals; ``f[i][j]`` is the exponent of ``x_{j+1}`` in tensor slot ``i+1``.
A column ``(f[0][j], ..., f[t-1][j])`` is written ``f_*(j)``.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .errors import DEFAULT_TUPLE_BUDGET, check_budget
from .group import compose, enumerate_group, group_order, identity, inverse
from .qseries import MultiPoly, TruncatedSeries, geometric_inverse, q_multinomial, series_mul
from .stats import major_index, major_of_sequence


def columns(f):
    return list(zip(*f))


def from_columns(cols, t):
    if not cols:
        return tuple(() for _ in range(t))
    return tuple(tuple(c[i] for c in cols) for i in range(t))


def row_degrees(f):
    return tuple(sum(row) for row in f)


def total_degree(f):
    return sum(sum(row) for row in f)


def zero_exponent(t, n):
    return tuple((0,) * n for _ in range(t))


def is_t_partite(f) -> bool:
    """Chain condition: columns weakly decrease lexicographically.

    This is the same as requiring f_{i0}(j) >= f_{i0}(j+1) whenever
    f_i(j) = f_i(j+1) for all i < i0.
    """
    cols = columns(f)
    return all(cols[j] >= cols[j + 1] for j in range(len(cols) - 1))


def _vectors_upto(t, bound):
    return [v for d in range(bound + 1) for v in _vectors_of_degree(t, d)]


def _vectors_of_degree(t, d):
    if t == 1:
        return [(d,)]
    return [(a,) + rest for a in range(d, -1, -1) for rest in _vectors_of_degree(t - 1, d - a)]


def _weakly_decreasing(cols, n, bound):
    """Sequences of n entries of ``cols`` (given in descending order) with
    non-decreasing indices and total degree <= bound."""
    degs = [sum(c) for c in cols]
    out = []

    def rec(start, prefix, left):
        if len(prefix) == n:
            out.append(list(prefix))
            return
        for k in range(start, len(cols)):
            if degs[k] <= left:
                prefix.append(cols[k])
                rec(k, prefix, left - degs[k])
                prefix.pop()

    rec(0, [], bound)
    return out


def enumerate_t_partite(t: int, n: int, bound: int):
    """Every t-partite partition with n parts and total degree <= bound.

    Columns are chosen left to right in lexicographically non-increasing
    order, so each member is produced exactly once.
    """
    cols = sorted(_vectors_upto(t, bound), reverse=True)
    return [from_columns(seq, t) for seq in _weakly_decreasing(cols, n, bound)]


def _monomial_of(f, t):
    return MultiPoly(t, {row_degrees(f): 1})


def gg1_lhs(t: int, n: int, bound: int) -> TruncatedSeries:
    terms = Counter(row_degrees(f) for f in enumerate_t_partite(t, n, bound))
    return TruncatedSeries(MultiPoly(t, terms), bound)


def product_one_tuples(n, m, t, convention="left", budget=DEFAULT_TUPLE_BUDGET):
    """All t-tuples in C_m wr S_n whose product is the identity.

    ``convention="left"`` means pi_1 pi_2 ... pi_t = 1 and ``"right"`` means
    pi_t ... pi_2 pi_1 = 1, products taken with the group's compose.
    """
    if convention not in ("left", "right"):
        raise ValueError(f"unknown convention {convention!r}")
    one = identity(n, m)
    if t == 1:
        yield (one,)
        return
    check_budget("number of tuples", group_order(n, m) ** (t - 1), budget)
    elements = list(enumerate_group(n, m, budget=None))
    for head in itertools.product(elements, repeat=t - 1):
        prod = one
        for g in head:
            prod = compose(prod, g) if convention == "left" else compose(g, prod)
        yield head + (inverse(prod),)


def gg1_numerator(t: int, n: int, budget=DEFAULT_TUPLE_BUDGET) -> MultiPoly:
    majors = {}
    terms = Counter()
    for tup in product_one_tuples(n, 1, t, "left", budget):
        exp = []
        for g in tup:
            if g not in majors:
                majors[g] = major_index(g)
            exp.append(majors[g])
        terms[tuple(exp)] += 1
    return MultiPoly(t, terms)


def _denominator_inverse(t, n, bound, scale=1):
    """1 / prod_{i,j} (1 - q_i^{scale*j}) to total degree ``bound``."""
    result = TruncatedSeries.one(t, bound)
    for i in range(t):
        for j in range(1, n + 1):
            exp = [0] * t
            exp[i] = scale * j
            result = series_mul(result, geometric_inverse(exp, bound))
    return result


def gg1_rhs(t: int, n: int, bound: int, budget=DEFAULT_TUPLE_BUDGET) -> TruncatedSeries:
    num = TruncatedSeries(gg1_numerator(t, n, budget), bound)
    return series_mul(num, _denominator_inverse(t, n, bound))


# -- shuffles ---------------------------------------------------------------


def shuffles(blocks):
    """All interleavings of ``blocks`` preserving the order inside each block.

    Output order is deterministic: at each position the earliest block is
    tried first.
    """
    blocks = [tuple(b) for b in blocks]
    seen = set()
    for b in blocks:
        if len(set(b)) != len(b) or seen & set(b):
            raise ValueError(f"blocks {blocks} do not have disjoint supports")
        seen |= set(b)
    total = sum(len(b) for b in blocks)
    out = []

    def rec(pos, word):
        if len(word) == total:
            out.append(tuple(word))
            return
        for k, b in enumerate(blocks):
            if pos[k] < len(b):
                word.append(b[pos[k]])
                pos[k] += 1
                rec(pos, word)
                pos[k] -= 1
                word.pop()

    rec([0] * len(blocks), [])
    return out


def gg2_check(blocks):
    """(sum over shuffles of q^major, q-multinomial * q^(sum of block majors))."""
    blocks = [tuple(b) for b in blocks]
    lhs = MultiPoly(1, Counter((major_of_sequence(s),) for s in shuffles(blocks)))
    sizes = [len(b) for b in blocks]
    shift = sum(major_of_sequence(b) for b in blocks)
    rhs = q_multinomial(sum(sizes), sizes) * MultiPoly.monomial((shift,))
    return lhs, rhs


# -- residues, theta, basis -------------------------------------------------


def residue_set(m: int, t: int):
    """R = {r in [0,m)^t : sum(r) = 0 mod m}, greatest first in lexicographic order.

    The linear order on R used throughout is plain lexicographic order.
    """
    return sorted((r for r in itertools.product(range(m), repeat=t) if sum(r) % m == 0), reverse=True)


def is_F0(f, m: int) -> bool:
    return all(sum(col) % m == 0 for col in columns(f))


def theta(f, m: int):
    """Split f entrywise as f = m*h + r; requires every column sum = 0 mod m."""
    if not is_F0(f, m):
        raise ValueError(f"{f} has a column sum not divisible by {m}")
    h = tuple(tuple(x // m for x in row) for row in f)
    r = tuple(tuple(x % m for x in row) for row in f)
    return h, r


def theta_inv(h, r, m: int):
    return tuple(tuple(m * a + b for a, b in zip(hr, rr)) for hr, rr in zip(h, r))


def _residue_rank(m, t, order):
    order = residue_set(m, t) if order is None else list(order)
    # rank 0 is the greatest element under <=_R
    return {r: len(order) - 1 - k for k, r in enumerate(order)}


def _column_key(col, m, rank):
    return (rank[tuple(x % m for x in col)], tuple(x // m for x in col))


def is_dia_basis_exponent(f, m: int, order=None) -> bool:
    """Membership in the basis index set: f in F_0, residue columns weakly
    decreasing under the order on R, and each constant-residue run of quotient
    columns a t-partite partition.

    ``order`` lists R from greatest to least; default is ``residue_set``.
    """
    if not is_F0(f, m):
        return False
    t = len(f)
    rank = _residue_rank(m, t, order)
    keys = [_column_key(c, m, rank) for c in columns(f)]
    return all(keys[j] >= keys[j + 1] for j in range(len(keys) - 1))


def enumerate_basis(m: int, n: int, t: int, bound: int, order=None):
    """All f with is_dia_basis_exponent(f) and total degree <= bound."""
    rank = _residue_rank(m, t, order)
    cols = [c for c in _vectors_upto(t, bound) if sum(c) % m == 0]
    cols.sort(key=lambda c: _column_key(c, m, rank), reverse=True)
    return [from_columns(seq, t) for seq in _weakly_decreasing(cols, n, bound)]


def compositions(n, k):
    """Weak compositions of n into k parts, lexicographic."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for a in range(n + 1):
        for rest in compositions(n - a, k - 1):
            yield (a,) + rest


def hilbert_dia_closed_form(m: int, n: int, t: int, bound: int) -> TruncatedSeries:
    """Sum over (n_r) of prod_r (q^r)^{n_r} F_{t,n_r}(q^m), with F from t-partite enumeration."""
    R = residue_set(m, t)
    inner = bound // m
    blocks = {k: TruncatedSeries(gg1_lhs(t, k, inner).poly.scale_exponents(m), bound) for k in range(n + 1)}
    total = TruncatedSeries(MultiPoly(t), bound)
    for sizes in compositions(n, len(R)):
        shift = [0] * t
        for r, k in zip(R, sizes):
            for i in range(t):
                shift[i] += r[i] * k
        term = TruncatedSeries(MultiPoly.monomial(shift), bound)
        for k in sizes:
            term = series_mul(term, blocks[k])
        total = total + term
    return total

"""Diagonal and tensor actions of C_m wr S_n on tensor monomials, and the
Hilbert series of the corresponding invariant algebras.

Roots of unity never become floats: a coefficient in Z[w] is a
:class:`CyclotomicInt`, and zero-testing reduces modulo the m-th cyclotomic
polynomial.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import canonical
from .errors import DEFAULT_GROUP_BUDGET, DEFAULT_TUPLE_BUDGET, check_budget
from .gg import (
    _denominator_inverse,
    columns,
    enumerate_basis,
    is_F0,
    residue_set,
    row_degrees,
)
from .group import ColoredLetter, ColoredPermutation, compose, enumerate_group, group_order, identity, inverse
from .qseries import MultiPoly, TruncatedSeries, series_div
from .stats import major_index

# -- cyclotomic integers ----------------------------------------------------


def _poly_divmod(num, den):
    """Integer long division by a monic polynomial; coefficient lists low to high."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dd = len(den) - 1
    if len(num) <= dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, d in enumerate(den):
                num[k - dd + i] -= c * d
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of Phi_m, low degree first."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem), "x^m - 1 not divisible by a proper cyclotomic factor"
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


class CyclotomicInt:
    """sum_k coeffs[k] * w^k with w a primitive m-th root of unity."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=None):
        self.m = m
        c = [0] * m
        for k, x in enumerate(coeffs or ()):
            c[k % m] += x
        self.coeffs = tuple(c)

    @classmethod
    def root_power(cls, m, k, mult=1):
        c = [0] * m
        c[k % m] = mult
        return cls(m, c)

    def reduced(self) -> tuple:
        """Canonical coordinates: the remainder modulo Phi_m, padded to deg Phi_m."""
        phi = cyclotomic_polynomial(self.m)
        _, rem = _poly_divmod(self.coeffs, phi)
        deg = len(phi) - 1
        return tuple(rem) + (0,) * (deg - len(rem))

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __bool__(self):
        return not self.is_zero()

    def as_integer(self):
        """The rational integer this equals, or None if it is not one."""
        r = self.reduced()
        return r[0] if not any(r[1:]) else None

    def __add__(self, other):
        if other.m != self.m:
            raise ValueError("modulus mismatch")
        return CyclotomicInt(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if other.m != self.m:
            raise ValueError("modulus mismatch")
        return CyclotomicInt(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other):
        if isinstance(other, int):
            return self.reduced() == CyclotomicInt(self.m, [other]).reduced()
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.m == other.m and (self - other).is_zero()

    def __hash__(self):
        return hash((self.m, self.reduced()))

    def __repr__(self):
        return f"CyclotomicInt(m={self.m}, {list(self.coeffs)})"


# -- actions and projection -------------------------------------------------


def _act_row(g, row):
    new = [0] * g.n
    phase = 0
    for j, (v, c) in enumerate(g.window):
        e = row[j]
        new[v - 1] = e
        phase += c * e
    return tuple(new), phase


def act(g: ColoredPermutation, f, slot: int):
    """Apply g in tensor slot ``slot`` (1-based): x_j -> w^{color g(j)} x_{|g(j)|}.

    Returns the image exponent matrix and the w-exponent picked up, mod m.
    """
    if not 1 <= slot <= len(f):
        raise ValueError(f"slot {slot} outside 1..{len(f)}")
    if any(len(row) != g.n for row in f):
        raise ValueError("exponent rows do not match the degree of g")
    row, phase = _act_row(g, f[slot - 1])
    return f[: slot - 1] + (row,) + f[slot:], phase % g.m


def act_diagonal(g: ColoredPermutation, f):
    """The same g in every slot; phases add."""
    if any(len(row) != g.n for row in f):
        raise ValueError("exponent rows do not match the degree of g")
    rows = []
    phase = 0
    for row in f:
        r, p = _act_row(g, row)
        rows.append(r)
        phase += p
    return tuple(rows), phase % g.m


def act_tensor(gs, f):
    """The tensor action of (g_1, ..., g_t) in G^t."""
    if len(gs) != len(f):
        raise ValueError("need one group element per tensor slot")
    rows = []
    phase = 0
    for g, row in zip(gs, f):
        r, p = _act_row(g, row)
        rows.append(r)
        phase += p
    return tuple(rows), phase % gs[0].m


@dataclass
class TensorMonomialSum:
    m: int
    terms: dict = field(default_factory=dict)

    def support(self):
        return set(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorMonomialSum):
            return NotImplemented
        return self.m == other.m and self.terms.keys() == other.terms.keys() and all(
            self.terms[k] == other.terms[k] for k in self.terms
        )


@lru_cache(maxsize=16)
def _group_list(n, m):
    return tuple(enumerate_group(n, m, budget=None))


def project(f, m: int, n: int | None = None, t: int | None = None, budget=DEFAULT_GROUP_BUDGET) -> TensorMonomialSum:
    """sum over g in G of the diagonal action of g on x^f, with exact coefficients."""
    f = tuple(tuple(row) for row in f)
    t = len(f) if t is None else t
    n = len(f[0]) if n is None else n
    if len(f) != t or any(len(row) != n for row in f):
        raise ValueError(f"exponent matrix is not {t}x{n}")
    check_budget(f"|C_{m} wr S_{n}|", group_order(n, m), budget)
    acc = {}
    for g in _group_list(n, m):
        img, phase = act_diagonal(g, f)
        acc.setdefault(img, [0] * m)[phase] += 1
    terms = {}
    for img, counts in acc.items():
        c = CyclotomicInt(m, counts)
        if not c.is_zero():
            terms[img] = c
    return TensorMonomialSum(m, terms)


def exponent_box(t, n, cap):
    for flat in itertools.product(range(cap), repeat=t * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(t))


@dataclass
class SupportReport:
    m: int
    n: int
    t: int
    cap: int
    checked: int = 0
    nonzero: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def projection_support_check(m: int, n: int, t: int, cap: int, budget=DEFAULT_GROUP_BUDGET) -> SupportReport:
    """Check projection(x^f) != 0 <=> f in F_0 over the box [0, cap)^{t x n}."""
    report = SupportReport(m, n, t, cap)
    for f in exponent_box(t, n, cap):
        nonzero = bool(project(f, m, n, t, budget))
        report.checked += 1
        report.nonzero += nonzero
        if nonzero != is_F0(f, m):
            report.violations.append({"f": f, "projection_nonzero": nonzero, "in_F0": is_F0(f, m)})
    return report


def column_permutation_exists(f, h) -> bool:
    return Counter(columns(f)) == Counter(columns(h))


def orbit_conditions(f, h, m: int, budget=DEFAULT_GROUP_BUDGET):
    """(supports meet, projections equal, h is a column permutation of f)."""
    pf = project(f, m, budget=budget)
    ph = project(h, m, budget=budget)
    return bool(pf.support() & ph.support()), pf == ph, column_permutation_exists(f, h)


# -- Hilbert series ---------------------------------------------------------


def hilbert_tia(m: int, n: int, t: int, bound: int) -> TruncatedSeries:
    """1 / prod_{i<=t, j<=n} (1 - q_i^{mj}), expanded to total degree ``bound``."""
    return _denominator_inverse(t, n, bound, scale=m)


def hilbert_dia(m: int, n: int, t: int, bound: int, order=None) -> TruncatedSeries:
    """Sum of q^{row degrees of f} over the diagonal-invariant basis index set."""
    terms = Counter(row_degrees(f) for f in enumerate_basis(m, n, t, bound, order))
    return TruncatedSeries(MultiPoly(t, terms), bound)


def hilbert_ratio(m: int, n: int, t: int, bound: int) -> TruncatedSeries:
    return series_div(hilbert_dia(m, n, t, bound), hilbert_tia(m, n, t, bound))


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("FLAGMAJOR_THREADS", "1")))
    except ValueError:
        return 1


def _rhs_chunk(args):
    m, n, t, convention, firsts = args
    elements = _group_list(n, m)
    fm = {g: canonical.flag_major(g) for g in elements}
    one = identity(n, m)
    acc = Counter()
    for i in firsts:
        for rest in itertools.product(elements, repeat=t - 2):
            head = (elements[i],) + rest
            prod = one
            for g in head:
                prod = compose(prod, g) if convention == "left" else compose(g, prod)
            last = inverse(prod)
            acc[tuple(fm[g] for g in head) + (fm[last],)] += 1
    return acc


def tuple_flag_major_sum(m: int, n: int, t: int, convention: str = "left", budget=DEFAULT_TUPLE_BUDGET) -> MultiPoly:
    """Sum over t-tuples with product 1 of prod_i q_i^{flag-major(pi_i)}.

    ``convention="left"``: pi_1 pi_2 ... pi_t = 1; ``"right"``: pi_t ... pi_1 = 1.
    Work is split over the first factor when FLAGMAJOR_THREADS > 1.
    """
    if convention not in ("left", "right"):
        raise ValueError(f"unknown convention {convention!r}")
    if t == 1:
        return MultiPoly.const(1, 1)
    size = group_order(n, m)
    check_budget("number of tuples", size ** (t - 1), budget)
    workers = min(worker_count(), size)
    chunks = [(m, n, t, convention, list(range(w, size, workers))) for w in range(workers)]
    if workers == 1:
        parts = [_rhs_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_rhs_chunk, chunks))
    total = Counter()
    for p in parts:
        total.update(p)
    return MultiPoly(t, total)


def signed_major_polynomial(n: int) -> MultiPoly:
    """sum over B_n of q1^{2 major(s) + k(s)} q2^{2 major(s^-1) + k(s)}, k = number of negative letters."""
    terms = Counter()
    for s in enumerate_group(n, 2):
        k = sum(c for _, c in s.window)
        terms[(2 * major_index(s) + k, 2 * major_index(inverse(s)) + k)] += 1
    return MultiPoly(2, terms)


# -- tuples with product one <-> (sizes, set partitions, bijections) --------


@dataclass(frozen=True)
class TupleData:
    """Sizes n_r, blocks N_r^(i) and bijections N_r^(i) -> N_r^(i+1), for r in R.

    ``residues`` fixes the indexing of R; ``sets[i][k]`` is N_r^(i+1) and
    ``maps[i][k]`` the sorted pairs of the bijection out of it, for r = residues[k].
    """

    m: int
    n: int
    t: int
    residues: tuple
    sizes: tuple
    sets: tuple
    maps: tuple

    def validate(self):
        m, n, t = self.m, self.n, self.t
        if tuple(self.residues) != tuple(residue_set(m, t)):
            raise ValueError("residues must list R in the standard order")
        if sum(self.sizes) != n or any(s < 0 for s in self.sizes):
            raise ValueError(f"sizes {self.sizes} do not sum to {n}")
        if len(self.sets) != t or len(self.maps) != t:
            raise ValueError("need one set partition and one family of bijections per slot")
        for i in range(t):
            blocks = self.sets[i]
            if sorted(x for b in blocks for x in b) != list(range(1, n + 1)):
                raise ValueError(f"blocks of slot {i + 1} are not a set partition of 1..{n}")
            for k, b in enumerate(blocks):
                if len(b) != self.sizes[k]:
                    raise ValueError(f"block for {self.residues[k]} in slot {i + 1} has wrong size")
        for k in range(len(self.residues)):
            for i in range(t):
                pairs = dict(self.maps[i][k])
                src, dst = self.sets[i][k], self.sets[(i + 1) % t][k]
                if set(pairs) != set(src) or sorted(pairs.values()) != sorted(dst):
                    raise ValueError(f"map {i + 1} for residue {self.residues[k]} is not a bijection")
            for j in self.sets[0][k]:
                x = j
                for i in range(t):
                    x = dict(self.maps[i][k])[x]
                if x != j:
                    raise ValueError(f"bijections for residue {self.residues[k]} do not compose to 1")


def _product_right(tup):
    prod = identity(tup[0].n, tup[0].m)
    for g in tup:
        prod = compose(g, prod)
    return prod


def tuple_to_data(tup) -> TupleData:
    """Forward map for tuples with pi_t ... pi_2 pi_1 = 1.

    Follows each j through pi_1, then pi_2, ..., recording the color picked up
    at each step; the color vector r_*(j) lands in R because the product is 1.
    """
    tup = tuple(tup)
    if not tup:
        raise ValueError("empty tuple")
    m, n, t = tup[0].m, tup[0].n, len(tup)
    if not _product_right(tup).is_identity():
        raise ValueError("tuple does not satisfy pi_t ... pi_1 = 1")
    R = residue_set(m, t)
    index = {r: k for k, r in enumerate(R)}
    sets = [[set() for _ in R] for _ in range(t)]
    maps = [[[] for _ in R] for _ in range(t)]
    for j in range(1, n + 1):
        path = [j]
        colors = []
        for g in tup:
            v, c = g.window[path[-1] - 1]
            colors.append(c)
            path.append(v)
        k = index[tuple(colors)]
        for i in range(t):
            sets[i][k].add(path[i])
            maps[i][k].append((path[i], path[i + 1]))
    sizes = tuple(len(s) for s in sets[0])
    return TupleData(
        m, n, t, tuple(R), sizes,
        tuple(tuple(frozenset(s) for s in row) for row in sets),
        tuple(tuple(tuple(sorted(p)) for p in row) for row in maps),
    )


def data_to_tuple(data: TupleData) -> tuple:
    """pi_i(j) = w^{r_i} * bijection_r^(i)(j) for j in N_r^(i)."""
    data.validate()
    out = []
    for i in range(data.t):
        window = [None] * data.n
        for k, r in enumerate(data.residues):
            for src, dst in data.maps[i][k]:
                window[src - 1] = ColoredLetter(dst, r[i])
        out.append(ColoredPermutation(data.m, data.n, window))
    return tuple(out)


def _ordered_set_partitions(n, sizes):
    """Assignments of 1..n to labelled blocks of the given sizes."""
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    remaining = list(range(1, n + 1))

    def rec(pool, sizes_left):
        if not sizes_left:
            yield ()
            return
        for chosen in itertools.combinations(pool, sizes_left[0]):
            left = [x for x in pool if x not in chosen]
            for tail in rec(left, sizes_left[1:]):
                yield (frozenset(chosen),) + tail

    yield from rec(remaining, (first,) + tuple(rest))


def enumerate_tuple_data(m: int, n: int, t: int, budget=DEFAULT_TUPLE_BUDGET):
    """Every valid TupleData, built by choosing sizes, set partitions, and t-1 free bijections."""
    from .gg import compositions

    check_budget("number of tuples", group_order(n, m) ** (t - 1), budget)
    R = tuple(residue_set(m, t))
    for sizes in compositions(n, len(R)):
        partitions = list(_ordered_set_partitions(n, sizes))
        for sets in itertools.product(partitions, repeat=t):
            free = []
            for k in range(len(R)):
                per_slot = []
                for i in range(t - 1):
                    src = sorted(sets[i][k])
                    dst = sorted(sets[i + 1][k])
                    per_slot.append([tuple(zip(src, p)) for p in itertools.permutations(dst)])
                free.append(list(itertools.product(*per_slot)))
            for choice in itertools.product(*free):
                maps = [[None] * len(R) for _ in range(t)]
                for k in range(len(R)):
                    chain = choice[k]
                    for i in range(t - 1):
                        maps[i][k] = tuple(sorted(chain[i]))
                    # close the cycle: N_r^(t) -> N_r^(1) undoing the first t-1 maps
                    closing = []
                    for j in sorted(sets[0][k]):
                        x = j
                        for i in range(t - 1):
                            x = dict(chain[i])[x]
                        closing.append((x, j))
                    maps[t - 1][k] = tuple(sorted(closing))
                yield TupleData(m, n, t, R, sizes, tuple(sets), tuple(tuple(row) for row in maps))


# alternative names
claim51_check = projection_support_check
claim52_equiv = orbit_conditions
rhs_theorem41 = tuple_flag_major_sum

"""Permutation statistics on C_m wr S_n.

Letters are ordered by
``1w^{m-1} < ... < nw^{m-1} < ... < 1w^1 < ... < nw^1 < 1 < ... < n``
and ``major_index`` sums the descent positions under that order.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import canonical
from .errors import DEFAULT_GROUP_BUDGET, check_budget
from .group import (
    ColoredLetter,
    ColoredPermutation,
    compose,
    enumerate_group,
    flag_coxeter_element,
    generator,
    group_order,
    identity,
    inverse,
)

STATS = ("flag-major", "major", "length", "log-sum")


def letter_key(letter):
    v, c = letter
    return (-c, v)


def letter_less(a, b) -> bool:
    return letter_key(a) < letter_key(b)


def major_of_sequence(seq, key=None) -> int:
    """Sum of the 1-based positions i with seq[i] > seq[i+1]."""
    if key is not None:
        seq = [key(x) for x in seq]
    return sum(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def major_index(pi: ColoredPermutation) -> int:
    w = pi.window
    total = 0
    for i in range(1, len(w)):
        (a, c), (b, d) = w[i - 1], w[i]
        if c < d or (c == d and a > b):
            total += i
    return total


def log_sum(pi: ColoredPermutation) -> int:
    return sum(c for _, c in pi.window)


def flag_major_formula(pi: ColoredPermutation) -> int:
    return pi.m * major_index(pi) + log_sum(pi)


# -- length -----------------------------------------------------------------


def _steps(n, m, inverse_s0):
    gens = [generator(i, n, m) for i in range(n)]
    if m == 1:
        gens = gens[1:]
    elif inverse_s0 and m > 2:
        gens.append(inverse(gens[0]))
    return gens


@lru_cache(maxsize=32)
def _length_table(n, m, inverse_s0):
    steps = _steps(n, m, inverse_s0)
    start = identity(n, m)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        d = dist[g] + 1
        for s in steps:
            h = compose(g, s)
            if h not in dist:
                dist[h] = d
                queue.append(h)
    return dist


def length_table(n: int, m: int, inverse_s0: bool = True, budget=DEFAULT_GROUP_BUDGET) -> dict:
    """Word length of every element, by breadth-first search from the identity.

    Steps are right multiplications by s_0, ..., s_{n-1}; with ``inverse_s0``
    (the default) s_0^{-1} is a step too, which only matters for m > 2.
    """
    check_budget(f"|C_{m} wr S_{n}|", group_order(n, m), budget)
    return _length_table(n, m, bool(inverse_s0))


def length(pi: ColoredPermutation, inverse_s0: bool = True, budget=DEFAULT_GROUP_BUDGET) -> int:
    return length_table(pi.n, pi.m, inverse_s0, budget)[pi]


# -- distributions ----------------------------------------------------------


@dataclass
class Distribution:
    m: int
    n: int
    stat: str
    counts: dict = field(default_factory=dict)

    @property
    def total(self):
        return sum(self.counts.values())

    def as_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "stat": self.stat,
            "distribution": {str(k): self.counts[k] for k in sorted(self.counts)},
            "total": self.total,
        }

    def to_json(self):
        return json.dumps(self.as_dict())

    def to_csv(self):
        lines = ["value,count"] + [f"{k},{self.counts[k]}" for k in sorted(self.counts)]
        return "\n".join(lines) + "\n"


def stat_function(stat: str, inverse_s0: bool = True, budget=DEFAULT_GROUP_BUDGET):
    if stat == "flag-major":
        return canonical.flag_major
    if stat == "major":
        return major_index
    if stat == "log-sum":
        return log_sum
    if stat == "length":
        return lambda pi: length(pi, inverse_s0, budget)
    raise ValueError(f"unknown statistic {stat!r}; expected one of {', '.join(STATS)}")


def distribution(n: int, m: int, stat: str, inverse_s0: bool = True, budget=DEFAULT_GROUP_BUDGET) -> Distribution:
    f = stat_function(stat, inverse_s0, budget)
    counts = Counter(f(pi) for pi in enumerate_group(n, m, budget))
    return Distribution(m, n, stat, dict(sorted(counts.items())))


# -- coset representatives and the length/flag-major bijection for B_n -------


def _embed(pi: ColoredPermutation, n: int) -> ColoredPermutation:
    if pi.n == n:
        return pi
    extra = tuple(ColoredLetter(j, 0) for j in range(pi.n + 1, n + 1))
    return ColoredPermutation._trusted(pi.m, n, pi.window + extra)


def _product(n, indices):
    result = identity(n, 2)
    for i in indices:
        result = compose(result, generator(i, n, 2))
    return result


def coset_rep(n: int, idx: int) -> ColoredPermutation:
    """The minimal-length representative r_{n,idx} of a left coset of B_{n-1} in B_n.

    idx = 0 gives the identity; 0 < idx <= n gives s_{n-idx} s_{n-idx+1} ... s_{n-1};
    n < idx < 2n gives s_{idx-n} s_{idx-n-1} ... s_1 s_0 s_1 ... s_{n-1}.
    """
    if not 0 <= idx < 2 * n:
        raise ValueError(f"coset index {idx} outside [0, {2 * n})")
    if idx == 0:
        return identity(n, 2)
    if idx <= n:
        return _product(n, range(n - idx, n))
    return _product(n, [idx - n - j for j in range(idx - n)] + list(range(n)))


@lru_cache(maxsize=64)
def _coset_lookup(n):
    # r_{n,idx} is determined by where it sends the letter n
    return {coset_rep(n, idx).window[n - 1]: idx for idx in range(2 * n)}


def coset_factorization(pi: ColoredPermutation) -> tuple:
    """(m_1, ..., m_n) with pi = r_{n,m_n} r_{n-1,m_{n-1}} ... r_{1,m_1}."""
    if pi.m != 2:
        raise ValueError("coset factorization is defined for m = 2 only")
    n = pi.n
    ms = [0] * n
    cur = pi
    for d in range(n, 0, -1):
        idx = _coset_lookup(d)[cur.window[d - 1]]
        ms[d - 1] = idx
        rest = compose(inverse(_embed(coset_rep(d, idx), cur.n)), cur)
        cur = ColoredPermutation._trusted(2, d - 1, rest.window[: d - 1]) if d > 1 else rest
    return tuple(ms)


def phi(pi: ColoredPermutation) -> ColoredPermutation:
    """Send r_{n,m_n} ... r_{1,m_1} to t_{n-1}^{m_n} ... t_0^{m_1}."""
    ms = coset_factorization(pi)
    return canonical.recompose(canonical.CanonicalWord(2, ms))


def t_top_applied(pi: ColoredPermutation) -> ColoredPermutation:
    """t_{n-1} * pi, used when checking the one-step increment property."""
    return compose(flag_coxeter_element(pi.n - 1, pi.n, pi.m), pi)

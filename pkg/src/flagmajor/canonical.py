"""Unique factorization over the flag Coxeter elements and the flag-major index.

Every ``pi`` in C_m wr S_n is uniquely ``t_{n-1}^{k_{n-1}} ... t_1^{k_1} t_0^{k_0}``
with ``0 <= k_i < m(i+1)``; the flag-major index is ``sum(k_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .group import ColoredLetter, ColoredPermutation, compose, flag_coxeter_element, identity


@dataclass(frozen=True)
class CanonicalWord:
    m: int
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        for i, k in enumerate(self.exponents):
            if not 0 <= k < self.m * (i + 1):
                raise ValueError(f"exponent k_{i}={k} outside [0, {self.m * (i + 1)})")

    @property
    def n(self):
        return len(self.exponents)


def all_words(n: int, m: int):
    """All bound-respecting exponent vectors, lexicographic in (k_0, ..., k_{n-1})."""
    for ks in itertools.product(*(range(m * (i + 1)) for i in range(n))):
        yield CanonicalWord(m, ks)


@lru_cache(maxsize=256)
def _powers(i: int, n: int, m: int):
    """[t_i^0, t_i^1, ..., t_i^{m(i+1)-1}] in C_m wr S_n."""
    t = flag_coxeter_element(i, n, m)
    out = [identity(n, m)]
    for _ in range(m * (i + 1) - 1):
        out.append(compose(t, out[-1]))
    return tuple(out)


def recompose(word: CanonicalWord, n: int | None = None, m: int | None = None) -> ColoredPermutation:
    if n is not None and n != word.n:
        raise ValueError(f"word has {word.n} exponents, expected {n}")
    if m is not None and m != word.m:
        raise ValueError(f"word has modulus {word.m}, expected {m}")
    n, m = word.n, word.m
    result = None
    for i in range(n - 1, -1, -1):
        k = word.exponents[i]
        if k == 0:
            continue
        p = _powers(i, n, m)[k]
        result = p if result is None else compose(result, p)
    return identity(n, m) if result is None else result


def top_exponent(letter: ColoredLetter, d: int) -> int:
    """The k with t_{d-1}^k(d) = letter, for a letter of abs value <= d.

    t_{d-1} walks d -> d-1 -> ... -> 1 -> w*d -> w*(d-1) -> ..., so after k
    steps the letter d has color k // d and abs value d - k % d.
    """
    return d * letter.color + (d - letter.abs) % d


def decompose(pi: ColoredPermutation) -> CanonicalWord:
    return CanonicalWord(pi.m, _exponents(pi))


def _exponents(pi):
    # plain (abs, color) tuples and an inlined top_exponent keep this loop cheap
    m, n = pi.m, pi.n
    letters = list(pi.window)
    ks = [0] * n
    for d in range(n, 0, -1):
        v, c = letters[d - 1]
        k = d * c + (d - v) % d
        ks[d - 1] = k
        if k:
            # left-multiply by t_{d-1}^{-k}: move every letter k steps back along the orbit
            period = m * d
            for j in range(d - 1):
                v, c = letters[j]
                p = (c * d + (d - v) - k) % period
                letters[j] = (d - p % d, p // d)
        letters.pop()
    return ks


def flag_major(pi: ColoredPermutation) -> int:
    return sum(_exponents(pi))

"""Elements of the wreath product C_m wr S_n in window notation.

An element is stored as its window ``(pi(1), ..., pi(n))`` where each entry is
a :class:`ColoredLetter` ``(abs, color)`` standing for ``omega**color * abs``.
Colors are exponents of a primitive m-th root of unity, kept mod m.

Composition is ``(a * b)(j) = a(b(j))``, with ``a`` extended to colored
letters by ``a(omega**c * v) = omega**c * a(v)``.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, NamedTuple, Sequence

from .errors import DEFAULT_GROUP_BUDGET, check_budget


class ColoredLetter(NamedTuple):
    abs: int
    color: int

    def __str__(self):
        return f"{self.abs}^{self.color}"


_letter = tuple.__new__


class ColoredPermutation:
    """An element of C_m wr S_n.  Immutable; equality is window equality."""

    __slots__ = ("m", "n", "window", "_hash")

    def __init__(self, m: int, n: int, window: Sequence):
        if m < 1 or n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
        letters = tuple(ColoredLetter(int(v), int(c)) for v, c in window)
        if len(letters) != n:
            raise ValueError(f"window has {len(letters)} entries, expected {n}")
        if sorted(v for v, _ in letters) != list(range(1, n + 1)):
            raise ValueError(f"absolute values {[v for v, _ in letters]} are not a permutation of 1..{n}")
        for v, c in letters:
            if not 0 <= c < m:
                raise ValueError(f"color {c} of letter {v} not in [0, {m})")
        self._set(m, n, letters)

    def _set(self, m, n, letters):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "window", letters)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, m, n, letters):
        # skips validation; callers guarantee the invariants
        self = _new(cls)
        _set_m(self, m)
        _set_n(self, n)
        _set_window(self, letters)
        _set_hash(self, None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("ColoredPermutation is immutable")

    def __eq__(self, other):
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        return self.m == other.m and self.window == other.window

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.m, self.window)))
        return self._hash

    def __repr__(self):
        return f"ColoredPermutation(m={self.m}, [{format_window(self)}])"

    def __mul__(self, other):
        return compose(self, other)

    def __call__(self, letter):
        """Apply to a position ``j`` or to a colored letter ``(v, c)``."""
        if isinstance(letter, int):
            return self.window[letter - 1]
        v, c = letter
        w = self.window[v - 1]
        return ColoredLetter(w.abs, (w.color + c) % self.m)

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.n, self.m)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    @property
    def abs_values(self):
        return tuple(v for v, _ in self.window)

    @property
    def colors(self):
        return tuple(c for _, c in self.window)

    def is_identity(self):
        return all(v == j and c == 0 for j, (v, c) in enumerate(self.window, 1))


_new = object.__new__
_set_m = ColoredPermutation.m.__set__
_set_n = ColoredPermutation.n.__set__
_set_window = ColoredPermutation.window.__set__
_set_hash = ColoredPermutation._hash.__set__


def identity(n: int, m: int) -> ColoredPermutation:
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    return ColoredPermutation._trusted(m, n, tuple(ColoredLetter(j, 0) for j in range(1, n + 1)))


def compose(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    if a.m != b.m or a.n != b.n:
        raise ValueError(f"cannot compose elements of C_{a.m} wr S_{a.n} and C_{b.m} wr S_{b.n}")
    m = a.m
    aw = a.window
    letters = tuple([_letter(ColoredLetter, (aw[v - 1][0], (aw[v - 1][1] + c) % m)) for v, c in b.window])
    return ColoredPermutation._trusted(m, a.n, letters)


def inverse(a: ColoredPermutation) -> ColoredPermutation:
    m = a.m
    letters = [None] * a.n
    for j, (v, c) in enumerate(a.window, 1):
        # a(j) = w^c v  =>  a^{-1}(v) = w^{-c} j
        letters[v - 1] = ColoredLetter(j, (-c) % m)
    return ColoredPermutation._trusted(m, a.n, tuple(letters))


def generator(i: int, n: int, m: int) -> ColoredPermutation:
    """The Coxeter-type generator s_i; s_0 multiplies the first letter by omega."""
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range 0..{n - 1}")
    letters = [ColoredLetter(j, 0) for j in range(1, n + 1)]
    if i == 0:
        letters[0] = ColoredLetter(1, 1 % m)
    else:
        letters[i - 1], letters[i] = ColoredLetter(i + 1, 0), ColoredLetter(i, 0)
    return ColoredPermutation._trusted(m, n, tuple(letters))


def flag_coxeter_element(i: int, n: int, m: int) -> ColoredPermutation:
    """t_i = s_i s_{i-1} ... s_1 s_0."""
    if not 0 <= i < n:
        raise ValueError(f"flag Coxeter index {i} out of range 0..{n - 1}")
    result = generator(i, n, m)
    for j in range(i - 1, -1, -1):
        result = compose(result, generator(j, n, m))
    return result


def group_order(n: int, m: int) -> int:
    return m**n * math.factorial(n)


def enumerate_group(n: int, m: int, budget: int | None = DEFAULT_GROUP_BUDGET) -> Iterator[ColoredPermutation]:
    """Every element exactly once, ordered by canonical exponent vector.

    The order is lexicographic on ``(k_0, k_1, ..., k_{n-1})`` where
    ``pi = t_{n-1}^{k_{n-1}} ... t_0^{k_0}``.
    """
    from .canonical import all_words, recompose

    check_budget(f"|C_{m} wr S_{n}|", group_order(n, m), budget)
    for word in all_words(n, m):
        yield recompose(word)


def iter_windows(n: int, m: int) -> Iterator[ColoredPermutation]:
    """Every element, built directly as (permutation, coloring) pairs."""
    for perm in itertools.permutations(range(1, n + 1)):
        for cols in itertools.product(range(m), repeat=n):
            yield ColoredPermutation._trusted(m, n, tuple(map(ColoredLetter, perm, cols)))


def parse_window(text: str, m: int) -> ColoredPermutation:
    """Parse ``"2^1,1^0"``; bare ``v`` means color 0, and ``-v`` means color 1 when m = 2."""
    letters = []
    for token in text.replace(" ", "").split(","):
        if not token:
            raise ValueError(f"empty token in window {text!r}")
        if "^" in token:
            v, _, c = token.partition("^")
            letter = (int(v), int(c))
        elif token.startswith("-"):
            if m != 2:
                raise ValueError(f"signed shorthand {token!r} needs m = 2")
            letter = (int(token[1:]), 1)
        else:
            letter = (int(token), 0)
        if letter[0] < 1:
            raise ValueError(f"bad letter {token!r}")
        letters.append(letter)
    return ColoredPermutation(m, len(letters), letters)


def format_window(pi: ColoredPermutation) -> str:
    return ",".join(str(letter) for letter in pi.window)

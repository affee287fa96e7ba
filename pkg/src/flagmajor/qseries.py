"""Exact sparse multivariate polynomials and total-degree truncated power series.

Coefficients are Python ints throughout.  Exponents are tuples of length
``nvars``; terms with zero coefficient are never stored.
"""

from __future__ import annotations

import itertools
import json
import math
from typing import Mapping


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def const(cls, c: int, nvars: int = 1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp, coeff: int = 1):
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def var(cls, i: int, nvars: int = 1, power: int = 1):
        exp = [0] * nvars
        exp[i] = power
        return cls.monomial(exp)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.const(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = var_names(self.nvars)
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exp]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def coeff(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, bound: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= bound})

    def scale_exponents(self, k: int) -> "MultiPoly":
        """Substitute q_i -> q_i^k in every variable."""
        return MultiPoly(self.nvars, {tuple(k * x for x in e): c for e, c in self.terms.items()})

    def evaluate(self, values) -> int:
        return sum(c * math.prod(v**x for v, x in zip(values, e)) for e, c in self.terms.items())

    def coefficients(self) -> list:
        """Dense coefficient list of a univariate polynomial."""
        if self.nvars != 1:
            raise ValueError("coefficients() needs a univariate polynomial")
        out = [0] * (self.degree() + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self, bound=None) -> str:
        return json.dumps(poly_json(self, bound))


def var_names(nvars):
    return [f"q{i + 1}" for i in range(nvars)]


def poly_json(p: MultiPoly, bound=None) -> dict:
    return {
        "vars": var_names(p.nvars),
        "bound": bound,
        "terms": [{"exp": list(e), "coeff": str(c)} for e, c in p.sorted_terms()],
    }


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.nvars != b.nvars:
        raise ValueError(f"nvars mismatch: {a.nvars} vs {b.nvars}")
    terms = dict(a.terms)
    for e, c in b.terms.items():
        terms[e] = terms.get(e, 0) + c
    return MultiPoly(a.nvars, terms)


def _mul_terms(a, b, bound=None):
    out = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if bound is not None and da + sum(eb) > bound:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.nvars != b.nvars:
        raise ValueError(f"nvars mismatch: {a.nvars} vs {b.nvars}")
    return MultiPoly(a.nvars, _mul_terms(a.terms, b.terms))


class TruncatedSeries:
    """A power series known exactly up to total degree ``bound``."""

    __slots__ = ("poly", "bound")

    def __init__(self, poly: MultiPoly, bound: int):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.poly = poly.truncate(bound)
        self.bound = bound

    @property
    def nvars(self):
        return self.poly.nvars

    @classmethod
    def one(cls, nvars: int, bound: int):
        return cls(MultiPoly.const(1, nvars), bound)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(other, self.bound)
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TruncatedSeries(self.poly + other.poly, min(self.bound, other.bound))

    def __mul__(self, other):
        return series_mul(self, self._check(other))

    def __truediv__(self, other):
        return series_div(self, self._check(other))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self.poly == other.poly

    def __repr__(self):
        return f"TruncatedSeries({self.poly} + O(deg {self.bound + 1}))"

    def coeff(self, exp):
        return self.poly.coeff(exp)

    def as_dict(self):
        return poly_json(self.poly, self.bound)

    def to_json(self):
        return json.dumps(self.as_dict())


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.nvars != b.nvars:
        raise ValueError(f"nvars mismatch: {a.nvars} vs {b.nvars}")
    bound = min(a.bound, b.bound)
    return TruncatedSeries(MultiPoly(a.nvars, _mul_terms(a.poly.terms, b.poly.terms, bound)), bound)


def monomials_upto(nvars: int, bound: int):
    """All exponent tuples of total degree <= bound, by ascending degree then lex."""
    for d in range(bound + 1):
        for cut in itertools.combinations(range(d + nvars - 1), nvars - 1):
            edges = (-1,) + cut + (d + nvars - 1,)
            yield tuple(edges[i + 1] - edges[i] - 1 for i in range(nvars))


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """The quotient q with q * den = num up to the common bound.

    Requires the constant term of ``den`` to be +1 or -1; coefficients are
    solved for in order of ascending total degree.
    """
    if num.nvars != den.nvars:
        raise ValueError(f"nvars mismatch: {num.nvars} vs {den.nvars}")
    nvars = num.nvars
    bound = min(num.bound, den.bound)
    zero = (0,) * nvars
    d0 = den.poly.coeff(zero)
    if d0 not in (1, -1):
        raise ZeroDivisionError(f"constant term {d0} of the divisor is not a unit")
    rest = [(e, c) for e, c in den.poly.terms.items() if e != zero]
    quot = {}
    for a in monomials_upto(nvars, bound):
        s = num.poly.terms.get(a, 0)
        for b, c in rest:
            diff = tuple(x - y for x, y in zip(a, b))
            if min(diff) < 0:
                continue
            qd = quot.get(diff)
            if qd:
                s -= c * qd
        if s:
            quot[a] = s * d0
    return TruncatedSeries(MultiPoly(nvars, quot), bound)


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """a / b for polynomials when b divides a and b has unit constant term."""
    bound = max(a.degree(), 0)
    q = series_div(TruncatedSeries(a, bound), TruncatedSeries(b, bound)).poly
    if q * b != a:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def q_int(k: int, nvars: int = 1, var: int = 0) -> MultiPoly:
    """[k]_q = 1 + q + ... + q^{k-1}."""
    if k < 0:
        raise ValueError("q-integer needs k >= 0")
    return MultiPoly(nvars, {tuple(j if i == var else 0 for i in range(nvars)): 1 for j in range(k)})


def q_factorial(n: int, nvars: int = 1, var: int = 0) -> MultiPoly:
    if n < 0:
        raise ValueError("q-factorial needs n >= 0")
    result = MultiPoly.const(1, nvars)
    for k in range(1, n + 1):
        result = result * q_int(k, nvars, var)
    return result


def q_multinomial(n: int, parts, nvars: int = 1, var: int = 0) -> MultiPoly:
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} are not a composition of {n}")
    den = MultiPoly.const(1, nvars)
    for p in parts:
        den = den * q_factorial(p, nvars, var)
    return exact_div(q_factorial(n, nvars, var), den)


def geometric_inverse(exp, bound: int) -> TruncatedSeries:
    """1 / (1 - q^exp) expanded up to total degree ``bound``."""
    exp = tuple(exp)
    step = sum(exp)
    if step == 0:
        raise ZeroDivisionError("1/(1-1) is undefined")
    terms = {tuple(k * x for x in exp): 1 for k in range(bound // step + 1)}
    return TruncatedSeries(MultiPoly(len(exp), terms), bound)

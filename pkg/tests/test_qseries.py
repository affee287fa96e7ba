import itertools
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagmajor.qseries import (
    MultiPoly,
    TruncatedSeries,
    exact_div,
    geometric_inverse,
    monomials_upto,
    poly_add,
    poly_mul,
    q_factorial,
    q_int,
    q_multinomial,
    series_div,
    series_mul,
)

q = MultiPoly.var(0)


def dense(coeffs):
    return MultiPoly(1, {(i,): c for i, c in enumerate(coeffs)})


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def inversions(word):
    return sum(1 for i, j in itertools.combinations(range(len(word)), 2) if word[i] > word[j])


def multiset_inversion_poly(parts):
    # sum of q^inv over rearrangements of 0^{p_0} 1^{p_1} ...
    word = [i for i, p in enumerate(parts) for _ in range(p)]
    counts = {}
    for w in set(itertools.permutations(word)):
        k = inversions(w)
        counts[k] = counts.get(k, 0) + 1
    return MultiPoly(1, {(k,): c for k, c in counts.items()})


@st.composite
def polys(draw, nvars=2, max_exp=3):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_exp)] * nvars), st.integers(-5, 5), max_size=5))
    return MultiPoly(nvars, terms)


@st.composite
def unit_series(draw, nvars=2, bound=5):
    p = draw(polys(nvars))
    zero = (0,) * nvars
    p = p - p.coeff(zero) + draw(st.sampled_from([1, -1]))
    return TruncatedSeries(p, bound)


def test_basic_arithmetic():
    assert (1 + q) * (1 - q) == 1 - q ** 2
    assert poly_add(q, q) == 2 * q
    assert poly_mul(1 + q, 1 + q) == 1 + 2 * q + q ** 2
    assert series_mul(TruncatedSeries(1 + q, 1), TruncatedSeries(1 + q, 1)).poly == 1 + 2 * q
    assert MultiPoly(1, {(3,): 0}) == 0
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly.var(0, 1) + MultiPoly.var(0, 2)


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


def test_series_div_examples():
    assert series_div(TruncatedSeries(1 - q ** 2, 5), TruncatedSeries(1 - q, 5)).poly == 1 + q
    assert series_div(TruncatedSeries.one(1, 3), TruncatedSeries(1 - q, 3)).poly == dense([1, 1, 1, 1])
    assert geometric_inverse((1,), 3).poly == dense([1, 1, 1, 1])
    assert geometric_inverse((1, 1), 4).poly == MultiPoly(2, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
    with pytest.raises(ZeroDivisionError):
        series_div(TruncatedSeries.one(1, 3), TruncatedSeries(2 + q, 3))
    with pytest.raises(ZeroDivisionError):
        series_div(TruncatedSeries.one(1, 3), TruncatedSeries(q, 3))


@settings(max_examples=150, deadline=None)
@given(polys(), unit_series())
def test_series_div_contract(num, den):
    a = TruncatedSeries(num, 5)
    quot = series_div(a, den)
    assert series_mul(quot, den) == a


def test_monomials_upto_graded():
    mons = list(monomials_upto(3, 3))
    assert len(mons) == math.comb(6, 3)
    assert len(set(mons)) == len(mons)
    assert [sum(e) for e in mons] == sorted(sum(e) for e in mons)


def test_exact_div():
    assert exact_div(1 - q ** 3, 1 - q) == 1 + q + q ** 2
    with pytest.raises(ArithmeticError):
        exact_div(1 + q ** 2, 1 + q)


def test_q_int_and_factorial():
    assert q_int(0) == 0
    assert q_int(1) == 1
    assert q_int(3) == 1 + q + q ** 2
    assert q_factorial(3) == dense([1, 2, 2, 1])
    coeffs = [1]
    for n in range(1, 9):
        coeffs = convolve(coeffs, [1] * n)
        assert q_factorial(n).coefficients() == coeffs
        assert q_factorial(n).evaluate([1]) == math.factorial(n)


def test_q_multinomial_examples():
    assert q_multinomial(2, [1, 1]) == 1 + q
    assert q_multinomial(4, [2, 2]) == dense([1, 1, 2, 1, 1])
    for n in range(6):
        assert q_multinomial(n, [n]) == 1
    with pytest.raises(ValueError):
        q_multinomial(3, [1, 1])
    with pytest.raises(ValueError):
        q_multinomial(1, [2, -1])


@pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 2), (1, 1, 1), (2, 1, 2), (3, 3), (1, 2, 1, 1)])
def test_q_multinomial_counts_inversions(parts):
    assert q_multinomial(sum(parts), parts) == multiset_inversion_poly(parts)


def compositions_of(n):
    for k in range(1, n + 1):
        for cut in itertools.combinations(range(1, n), k - 1):
            edges = (0,) + cut + (n,)
            yield [edges[i + 1] - edges[i] for i in range(k)]


@pytest.mark.parametrize("n", range(0, 9))
def test_q_multinomial_at_one_and_palindromic(n):
    for parts in compositions_of(n):
        p = q_multinomial(n, parts)
        assert p.evaluate([1]) == math.factorial(n) // math.prod(math.factorial(x) for x in parts)
        c = p.coefficients()
        assert c == c[::-1]
        assert all(x > 0 for x in c)


def test_multivariate_q_variants():
    p = q_multinomial(3, [2, 1], nvars=2, var=1)
    assert p == MultiPoly(2, {(0, 0): 1, (0, 1): 1, (0, 2): 1})


def test_json_schema():
    p = 3 + MultiPoly.var(1, 2, 2) - MultiPoly.var(0, 2)
    data = json.loads(p.to_json())
    assert data == {"vars": ["q1", "q2"], "bound": None, "terms": [
        {"exp": [0, 0], "coeff": "3"}, {"exp": [0, 2], "coeff": "1"}, {"exp": [1, 0], "coeff": "-1"}]}
    s = TruncatedSeries(dense([1, 2, 3]), 1)
    assert json.loads(s.to_json())["bound"] == 1
    assert len(json.loads(s.to_json())["terms"]) == 2
    big = MultiPoly(1, {(0,): 10 ** 30})
    assert json.loads(big.to_json())["terms"][0]["coeff"] == str(10 ** 30)

import cmath
import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagmajor.canonical import flag_major
from flagmajor.gg import gg1_lhs, is_F0, residue_set
from flagmajor.group import ColoredPermutation, compose, generator, identity, iter_windows
from flagmajor.invariants import (
    CyclotomicInt,
    TupleData,
    act,
    act_diagonal,
    act_tensor,
    projection_support_check,
    orbit_conditions,
    column_permutation_exists,
    cyclotomic_polynomial,
    data_to_tuple,
    enumerate_tuple_data,
    hilbert_dia,
    hilbert_ratio,
    hilbert_tia,
    project,
    tuple_flag_major_sum,
    signed_major_polynomial,
    tuple_to_data,
)
from flagmajor.qseries import MultiPoly


def numeric_value(m, coeffs):
    w = cmath.exp(2j * math.pi / m)
    return sum(c * w ** k for k, c in enumerate(coeffs))


def numeric_cyclotomic(m):
    # product over primitive roots, rounded back to integers
    poly = [1]
    for k in range(1, m + 1):
        if math.gcd(k, m) == 1:
            z = cmath.exp(2j * math.pi * k / m)
            poly = [a - z * b for a, b in zip([0] + poly, poly + [0])]
    return tuple(round(c.real) for c in poly)


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_polynomial_matches_numeric(m):
    assert cyclotomic_polynomial(m) == numeric_cyclotomic(m)
    assert len(cyclotomic_polynomial(m)) - 1 == sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert not CyclotomicInt(3, [1, 1, 1])
    assert CyclotomicInt(4, [1, 0, 1, 0]).is_zero()
    assert CyclotomicInt(6, [2, 0, 0, 0, 0, 0]).as_integer() == 2
    assert CyclotomicInt(3, [0, 1, 0]).as_integer() is None
    assert CyclotomicInt(2, [3, 1]) == 2
    assert CyclotomicInt.root_power(5, 7) == CyclotomicInt(5, [0, 0, 1])


@given(st.integers(1, 12), st.data())
def test_zero_test_matches_numeric(m, data):
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m))
    if data.draw(st.booleans()):
        # force a multiple of the cyclotomic polynomial
        phi = cyclotomic_polynomial(m)
        mult = data.draw(st.lists(st.integers(-2, 2), min_size=m, max_size=m))
        prod = [0] * (len(phi) + m)
        for i, a in enumerate(mult):
            for j, b in enumerate(phi):
                prod[i + j] += a * b
        coeffs = prod
    z = CyclotomicInt(m, coeffs)
    assert z.is_zero() == (abs(numeric_value(m, coeffs)) < 1e-9)


def test_act_examples():
    s0 = generator(0, 1, 2)
    assert act(s0, ((1,),), 1) == (((1,),), 1)
    f = ((2, 1, 0), (1, 0, 3))
    assert act(identity(3, 4), f, 2) == (f, 0)
    assert act_diagonal(identity(3, 4), f) == (f, 0)
    g = ColoredPermutation(3, 3, [(2, 1), (3, 0), (1, 2)])
    # x1 -> w x2, x2 -> x3, x3 -> w^2 x1
    assert act(g, f, 1) == (((0, 2, 1), (1, 0, 3)), 2)
    assert act(g, f, 2) == (((2, 1, 0), (3, 1, 0)), (1 + 6) % 3)
    with pytest.raises(ValueError):
        act(g, f, 3)
    with pytest.raises(ValueError):
        act(generator(0, 2, 3), f, 1)


@pytest.mark.parametrize("m,n,t", [(2, 2, 2), (3, 2, 2), (4, 1, 3)])
def test_s0_diagonal_phase_is_first_column_sum(m, n, t):
    s0 = generator(0, n, m)
    for flat in itertools.product(range(4), repeat=n * t):
        f = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(t))
        assert act_diagonal(s0, f) == (f, sum(row[0] for row in f) % m)


def test_diagonal_is_tensor_with_equal_entries():
    f = ((1, 2), (3, 0))
    for g in iter_windows(2, 3):
        assert act_diagonal(g, f) == act_tensor((g, g), f)


def test_project_examples():
    assert not project(((1,),), 2)
    p = project(((2,),), 2)
    assert p.terms == {((2,),): CyclotomicInt(2, [2])}
    z = project(((0, 0), (0, 0)), 3)
    assert list(z.terms) == [((0, 0), (0, 0))]
    assert z.terms[((0, 0), (0, 0))] == 18


def test_is_F0_examples():
    assert is_F0(((1, 3), (1, 1)), 2)
    assert not is_F0(((1,),), 2)
    assert all(is_F0(((a, b),), 1) for a in range(3) for b in range(3))


def test_claim51_examples():
    rep = projection_support_check(2, 1, 1, 4)
    assert rep.ok and rep.checked == 4 and rep.nonzero == 2
    rep = projection_support_check(3, 1, 2, 3)
    assert rep.ok and rep.nonzero == 3
    for a, b in itertools.product(range(3), repeat=2):
        assert bool(project(((a,), (b,)), 3)) == ((a + b) % 3 == 0)
    rep = projection_support_check(1, 2, 1, 3)
    assert rep.ok and rep.nonzero == rep.checked == 9


def test_claim52_examples():
    f = ((2, 0), (0, 2))
    h = ((0, 2), (2, 0))
    assert orbit_conditions(f, h, 2) == (True, True, True)
    assert orbit_conditions(f, f, 2) == (True, True, True)
    assert orbit_conditions(f, ((2, 2), (0, 0)), 2) == (False, False, False)
    assert column_permutation_exists(f, h)


@pytest.mark.parametrize("m,n,t", [(2, 2, 2), (3, 2, 1), (2, 3, 1), (4, 1, 2)])
def test_projection_of_F0_has_positive_integer_coefficients(m, n, t):
    for flat in itertools.product(range(4), repeat=n * t):
        f = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(t))
        if not is_F0(f, m):
            continue
        p = project(f, m)
        values = [c.as_integer() for c in p.terms.values()]
        assert all(v is not None and v > 0 for v in values)
        # one orbit under column permutations, with equal weights
        assert len(set(values)) == 1
        assert len(p.terms) == len({tuple(zip(*c)) for c in itertools.permutations(zip(*f))})


def test_hilbert_tia_examples():
    q = MultiPoly.var(0)
    assert hilbert_tia(2, 1, 1, 4).poly == 1 + q ** 2 + q ** 4
    assert hilbert_tia(1, 2, 1, 3).poly == 1 + q + 2 * q ** 2 + 2 * q ** 3
    assert hilbert_tia(3, 2, 2, 6).coeff((0, 0)) == 1


def test_hilbert_dia_examples():
    expected = MultiPoly(2, {(0, 0): 1, (1, 1): 1, (2, 0): 1, (0, 2): 1})
    assert hilbert_dia(2, 1, 2, 2).poly == expected
    for t, n in [(1, 3), (2, 2), (3, 1)]:
        assert hilbert_dia(1, n, t, 6) == gg1_lhs(t, n, 6)
    assert hilbert_dia(3, 2, 2, 5).coeff((0, 0)) == 1


def test_rhs_examples():
    one = MultiPoly.const(1, 1)
    for m in (1, 2, 5):
        assert tuple_flag_major_sum(m, 1, 1) == one
    pair = MultiPoly(2, {(0, 0): 1, (1, 1): 1})
    assert tuple_flag_major_sum(2, 1, 2) == pair
    assert tuple_flag_major_sum(1, 2, 2) == pair
    for m, n, t in [(2, 2, 2), (3, 2, 2), (1, 3, 3), (2, 1, 3)]:
        left = tuple_flag_major_sum(m, n, t, "left")
        assert left == tuple_flag_major_sum(m, n, t, "right")
        assert left.evaluate([1] * t) == (m ** n * math.factorial(n)) ** (t - 1)
    with pytest.raises(ValueError):
        tuple_flag_major_sum(2, 2, 2, "sideways")


def test_rhs_parallel_matches_serial(monkeypatch):
    serial = tuple_flag_major_sum(2, 2, 3)
    monkeypatch.setenv("FLAGMAJOR_THREADS", "2")
    assert tuple_flag_major_sum(2, 2, 3) == serial


def test_ratio_small():
    assert hilbert_ratio(2, 1, 2, 4).poly == MultiPoly(2, {(0, 0): 1, (1, 1): 1})
    assert hilbert_ratio(2, 2, 2, 10).poly == signed_major_polynomial(2)


def test_signed_major_polynomial_matches_flag_major():
    p = signed_major_polynomial(2)
    assert p.evaluate([1, 1]) == 8
    # the q1-marginal is the flag-major generating function
    marg = {}
    for (a, _), c in p.terms.items():
        marg[a] = marg.get(a, 0) + c
    counts = {}
    for s in iter_windows(2, 2):
        counts[flag_major(s)] = counts.get(flag_major(s), 0) + 1
    assert marg == counts


def test_tuple_data_examples():
    e = identity(3, 2)
    d = tuple_to_data((e, e))
    k = d.residues.index((0, 0))
    assert d.sizes[k] == 3
    assert all(src == dst for row in d.maps for pairs in row for src, dst in pairs)
    s0 = generator(0, 1, 2)
    d = tuple_to_data((s0, s0))
    assert d.sizes[d.residues.index((1, 1))] == 1
    with pytest.raises(ValueError):
        tuple_to_data((s0, identity(1, 2)))


@pytest.mark.parametrize("m,n,t", [(2, 2, 2), (3, 2, 2), (2, 1, 3), (1, 3, 2), (2, 2, 3)])
def test_tuple_data_round_trips(m, n, t):
    elements = list(iter_windows(n, m))
    valid = 0
    for tup in itertools.product(elements, repeat=t):
        prod = identity(n, m)
        for g in tup:
            prod = compose(g, prod)
        if prod.is_identity():
            valid += 1
            assert data_to_tuple(tuple_to_data(tup)) == tup
        else:
            with pytest.raises(ValueError):
                tuple_to_data(tup)
    assert valid == len(elements) ** (t - 1)
    datas = list(enumerate_tuple_data(m, n, t))
    assert len(datas) == valid
    for d in datas:
        assert tuple_to_data(data_to_tuple(d)) == d


def test_tuple_data_validation():
    d = tuple_to_data((identity(2, 2), identity(2, 2)))
    bad = TupleData(d.m, d.n, d.t, d.residues, d.sizes[::-1], d.sets, d.maps)
    with pytest.raises(ValueError):
        bad.validate()
    assert residue_set(2, 2) == list(d.residues)

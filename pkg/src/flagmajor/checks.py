"""Exhaustive finite verifications, each returning a :class:`VerificationReport`.

A failing report always carries a concrete counterexample.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from . import canonical, gg, invariants, qseries, stats
from .errors import DEFAULT_GROUP_BUDGET, DEFAULT_TUPLE_BUDGET, check_budget
from .group import (
    compose,
    enumerate_group,
    flag_coxeter_element,
    format_window,
    group_order,
    inverse,
    iter_windows,
)


@dataclass
class VerificationReport:
    check: str
    params: dict
    passed: bool = True
    counterexample: object = None
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def fail(self, counterexample):
        if self.passed:
            self.passed = False
            self.counterexample = counterexample
        return self

    def as_dict(self):
        # wall time is left out so that output is reproducible byte for byte
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "counterexample": self.counterexample,
            "details": self.details,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)

    def line(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{self.status.upper()}] {self.check}({args}) in {self.wall_time:.2f}s"


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _dist_payload(d):
    return {str(k): v for k, v in sorted(d.items())}


@_timed
def flag_major_equals_major(n, budget=DEFAULT_GROUP_BUDGET):
    """For m = 1, flag-major equals the ordinary major index on all of S_n."""
    report = VerificationReport("claim-2.1", {"m": 1, "n": n})
    check_budget(f"|S_{n}|", group_order(n, 1), budget)
    count = 0
    for pi in iter_windows(n, 1):
        count += 1
        fm, mj = canonical.flag_major(pi), stats.major_index(pi)
        if fm != mj:
            return report.fail({"perm": format_window(pi), "flag_major": fm, "major": mj})
    report.details["elements"] = count
    return report


@_timed
def length_equidistribution(n, inverse_s0=True, budget=DEFAULT_GROUP_BUDGET):
    """For m = 2, flag-major and length have the same distribution on B_n."""
    report = VerificationReport("thm-2.2", {"m": 2, "n": n})
    fm = stats.distribution(n, 2, "flag-major", budget=budget).counts
    ln = stats.distribution(n, 2, "length", inverse_s0, budget).counts
    report.details = {"flag_major": _dist_payload(fm), "length": _dist_payload(ln)}
    if fm != ln:
        value = min(k for k in set(fm) | set(ln) if fm.get(k, 0) != ln.get(k, 0))
        report.fail({"value": value, "flag_major_count": fm.get(value, 0), "length_count": ln.get(value, 0)})
    return report


@_timed
def length_equidistribution_fails(m, n, inverse_s0=True, budget=DEFAULT_GROUP_BUDGET):
    """For m >= 3 the two distributions are expected to differ."""
    report = VerificationReport("thm-2.2-negative", {"m": m, "n": n, "inverse_s0": inverse_s0})
    fm = stats.distribution(n, m, "flag-major", budget=budget).counts
    ln = stats.distribution(n, m, "length", inverse_s0, budget).counts
    report.details = {"flag_major": _dist_payload(fm), "length": _dist_payload(ln)}
    if fm == ln:
        report.fail({"distribution": _dist_payload(fm)})
    return report


@_timed
def coset_bijection(n, budget=DEFAULT_GROUP_BUDGET):
    """phi is a bijection of B_n carrying length to flag-major."""
    report = VerificationReport("phi-2.2", {"m": 2, "n": n})
    lengths = stats.length_table(n, 2, budget=budget)
    for k in range(2 * n):
        r = stats.coset_rep(n, k)
        if lengths[r] != k:
            return report.fail({"coset_rep": k, "window": format_window(r), "length": lengths[r]})
    images = set()
    for pi in enumerate_group(n, 2, budget):
        img = stats.phi(pi)
        images.add(img)
        if canonical.flag_major(img) != lengths[pi]:
            return report.fail(
                {"perm": format_window(pi), "phi": format_window(img),
                 "length": lengths[pi], "flag_major_of_phi": canonical.flag_major(img)}
            )
    if len(images) != group_order(n, 2):
        return report.fail({"image_size": len(images), "group_order": group_order(n, 2)})
    report.details["elements"] = len(images)
    return report


@_timed
def flag_major_formula(m, n, budget=DEFAULT_GROUP_BUDGET):
    """m * major + color sum equals the exponent sum of the canonical factorization."""
    report = VerificationReport("thm-3.1", {"m": m, "n": n})
    check_budget(f"|C_{m} wr S_{n}|", group_order(n, m), budget)
    count = 0
    for pi in iter_windows(n, m):
        count += 1
        a, b = stats.flag_major_formula(pi), canonical.flag_major(pi)
        if a != b:
            return report.fail({"perm": format_window(pi), "formula": a, "flag_major": b})
    report.details["elements"] = count
    return report


@_timed
def top_step_increment(m, n, budget=DEFAULT_GROUP_BUDGET):
    """Left multiplication by t_{n-1} raises m*major + color sum by exactly one,
    unless pi(n) = w^{m-1} * 1."""
    report = VerificationReport("lemma-3.2", {"m": m, "n": n})
    check_budget(f"|C_{m} wr S_{n}|", group_order(n, m), budget)
    t = flag_coxeter_element(n - 1, n, m)
    excluded = (1, m - 1)
    eligible = 0
    for pi in iter_windows(n, m):
        if pi.window[-1] == excluded:
            continue
        eligible += 1
        before = stats.flag_major_formula(pi)
        after = stats.flag_major_formula(compose(t, pi))
        if after - before != 1:
            return report.fail({"perm": format_window(pi), "before": before, "after": after})
    report.details["eligible"] = eligible
    return report


def _first_difference(a, b):
    keys = sorted(set(a.terms) | set(b.terms))
    for k in keys:
        if a.coeff(k) != b.coeff(k):
            return {"exp": list(k), "lhs": str(a.coeff(k)), "rhs": str(b.coeff(k))}
    return None


@_timed
def hilbert_ratio_identity(m, n, t, bound, convention="left", budget=DEFAULT_TUPLE_BUDGET):
    """F_D / F_T equals the flag-major tuple sum, up to total degree ``bound``."""
    report = VerificationReport("thm-4.1", {"m": m, "n": n, "t": t, "d": bound, "convention": convention})
    lhs = invariants.hilbert_ratio(m, n, t, bound).poly
    rhs = invariants.tuple_flag_major_sum(m, n, t, convention, budget).truncate(bound)
    report.details["terms"] = len(lhs.terms)
    diff = _first_difference(lhs, rhs)
    if diff:
        report.fail(diff)
    return report


@_timed
def t_partite_identity(t, n, bound, budget=DEFAULT_TUPLE_BUDGET):
    """t-partite partition enumeration equals the major-index tuple sum over prod (1 - q_i^j)."""
    report = VerificationReport("gg1", {"t": t, "n": n, "d": bound})
    lhs = gg.gg1_lhs(t, n, bound).poly
    rhs = gg.gg1_rhs(t, n, bound, budget).poly
    report.details["terms"] = len(lhs.terms)
    diff = _first_difference(lhs, rhs)
    if diff:
        report.fail(diff)
    return report


def block_families(max_size, nblocks):
    """All ordered families of ``nblocks`` words over disjoint supports covering
    {1..N} for some N <= max_size.  Relative order is all that the major index
    sees, so these cover every case up to relabelling."""
    for size in range(max_size + 1):
        for labels in itertools.product(range(nblocks), repeat=size):
            supports = [[x for x, b in zip(range(1, size + 1), labels) if b == k] for k in range(nblocks)]
            for words in itertools.product(*(itertools.permutations(s) for s in supports)):
                yield words


@_timed
def shuffle_identity(max_size, nblocks=2):
    """Shuffle sums of q^major equal the q-multinomial closed form."""
    report = VerificationReport("gg2", {"n": max_size, "blocks": nblocks})
    count = 0
    for blocks in block_families(max_size, nblocks):
        count += 1
        lhs, rhs = gg.gg2_check(blocks)
        if lhs != rhs:
            return report.fail({"blocks": [list(b) for b in blocks], "shuffle_sum": str(lhs), "closed_form": str(rhs)})
    report.details["families"] = count
    return report


@_timed
def projection_support(m, n, t, cap, budget=DEFAULT_GROUP_BUDGET):
    """The projection of x^f is nonzero exactly when every column sum of f is 0 mod m."""
    report = VerificationReport("claim-5.1", {"m": m, "n": n, "t": t, "cap": cap})
    res = invariants.projection_support_check(m, n, t, cap, budget)
    report.details = {"checked": res.checked, "nonzero": res.nonzero}
    if res.violations:
        v = res.violations[0]
        report.fail({"f": [list(r) for r in v["f"]], "projection_nonzero": v["projection_nonzero"], "in_F0": v["in_F0"]})
    return report


def f0_members(m, n, t, bound):
    out = []
    for flat in qseries.monomials_upto(t * n, bound):
        f = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(t))
        if gg.is_F0(f, m):
            out.append(f)
    return out


@_timed
def projection_orbits(m, n, t, bound, budget=DEFAULT_GROUP_BUDGET):
    """For f, h in F_0: supports meet <=> projections equal <=> same columns up to order."""
    report = VerificationReport("claim-5.2", {"m": m, "n": n, "t": t, "d": bound})
    members = f0_members(m, n, t, bound)
    projections = {f: invariants.project(f, m, n, t, budget) for f in members}
    pairs = 0
    for f, h in itertools.product(members, repeat=2):
        pairs += 1
        pf, ph = projections[f], projections[h]
        triple = (bool(pf.support() & ph.support()), pf == ph, invariants.column_permutation_exists(f, h))
        if len(set(triple)) != 1:
            return report.fail({"f": [list(r) for r in f], "h": [list(r) for r in h], "conditions": list(triple)})
    report.details = {"members": len(members), "pairs": pairs}
    return report


@_timed
def tuple_data_bijection(m, n, t, budget=DEFAULT_TUPLE_BUDGET):
    """Tuples with pi_t ... pi_1 = 1 correspond one-to-one with (sizes, blocks, bijections)."""
    report = VerificationReport("bijection-5.4", {"m": m, "n": n, "t": t})
    size = group_order(n, m)
    check_budget("number of tuples", size**t, budget)
    elements = list(enumerate_group(n, m, budget=None))
    valid = rejected = 0
    for tup in itertools.product(elements, repeat=t):
        try:
            data = invariants.tuple_to_data(tup)
        except ValueError:
            rejected += 1
            continue
        valid += 1
        back = invariants.data_to_tuple(data)
        if back != tup:
            return report.fail({"tuple": [format_window(g) for g in tup], "round_trip": [format_window(g) for g in back]})
        if invariants.tuple_to_data(back) != data:
            return report.fail({"tuple": [format_window(g) for g in tup], "reason": "data -> tuple -> data changed the data"})
    if valid != size ** (t - 1):
        return report.fail({"valid_tuples": valid, "expected": size ** (t - 1)})
    seen = set()
    built = 0
    for data in invariants.enumerate_tuple_data(m, n, t, budget):
        built += 1
        tup = invariants.data_to_tuple(data)
        if invariants.tuple_to_data(tup) != data:
            return report.fail({"tuple": [format_window(g) for g in tup], "reason": "enumerated data does not round-trip"})
        seen.add(tup)
    if built != valid or len(seen) != valid:
        return report.fail({"enumerated_data": built, "distinct_tuples": len(seen), "valid_tuples": valid})
    report.details = {"tuples": size**t, "valid": valid, "rejected": rejected}
    return report


@_timed
def signed_example(n, budget=DEFAULT_GROUP_BUDGET):
    """m = t = 2: F_D / F_T = sum over B_n of q1^{2maj(s)+k(s)} q2^{2maj(s^-1)+k(s)}."""
    report = VerificationReport("example-5.5", {"m": 2, "n": n, "t": 2})
    for s in enumerate_group(n, 2, budget):
        k = stats.log_sum(s)
        if stats.log_sum(inverse(s)) != k:
            return report.fail({"perm": format_window(s), "reason": "k(s) != k(s^-1)"})
        if canonical.flag_major(s) != 2 * stats.major_index(s) + k:
            return report.fail({"perm": format_window(s), "reason": "flag-major != 2 major + k"})
    poly = invariants.signed_major_polynomial(n)
    bound = max(poly.degree(), 0)
    ratio = invariants.hilbert_ratio(2, n, 2, bound).poly
    report.details = {"bound": bound, "terms": len(poly.terms)}
    diff = _first_difference(ratio, poly)
    if diff:
        report.fail(diff)
    return report


CHECKS = {
    "claim-2.1": flag_major_equals_major,
    "thm-2.2": length_equidistribution,
    "thm-2.2-negative": length_equidistribution_fails,
    "phi-2.2": coset_bijection,
    "thm-3.1": flag_major_formula,
    "lemma-3.2": top_step_increment,
    "thm-4.1": hilbert_ratio_identity,
    "gg1": t_partite_identity,
    "gg2": shuffle_identity,
    "claim-5.1": projection_support,
    "claim-5.2": projection_orbits,
    "bijection-5.4": tuple_data_bijection,
    "example-5.5": signed_example,
}

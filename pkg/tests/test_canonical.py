from concurrent.futures import ThreadPoolExecutor
from itertools import product

from cyclichall import canonical
from cyclichall.canonical import (CanonicalElement, NotCovered, canonical_element,
                                  canonical_element_ic, contributing_set, is_tight,
                                  monomial_expand, slice, slice21_monomial_pbw,
                                  slice_closed_form)
from cyclichall.coeff import LaurentPoly, v
from cyclichall.core import dim_vector, enumerate_by_dimvec, parse_matrix, prec

M = parse_matrix
ONE = LaurentPoly.const(1)


def _all(n, top):
    for d in product(range(top + 1), repeat=n):
        if 0 < sum(d) <= top:
            yield from enumerate_by_dimvec(d)


def test_monomial_examples():
    A = M("n=2;1,2:1;1,3:1;2,3:1")
    assert dict(monomial_expand(A).items()) == {A: ONE, M("n=2;1,2:2;2,3:2"): v ** -1 + v ** -3}
    S = M("n=3;2,3:1")
    assert dict(monomial_expand(S).items()) == {S: ONE}


def test_canonical_examples():
    A = M("n=2;1,2:1;1,3:1;2,3:2")
    assert is_tight(A)
    B = M("n=2;1,2:2;1,3:1;2,3:1")
    ce = canonical_element(B)
    assert ce.pbw == {B: ONE, M("n=2;1,2:3;2,3:2"): v ** -2 + v ** -4}
    assert not ce.tight
    assert contributing_set(B) == [M("n=2;1,2:3;2,3:2")]
    S = M("n=2;1,2:3")
    assert canonical_element(S).pbw == {S: ONE}


def test_triangularity():
    for n, top in ((2, 6), (3, 5)):
        for A in _all(n, top):
            X = monomial_expand(A)
            assert X.coeff(A) == ONE
            for B in X.support():
                assert dim_vector(B) == dim_vector(A)
                assert B == A or prec(B, A)


def test_routes_agree_n3():
    for A in _all(3, 4):
        assert canonical_element(A) == canonical_element_ic(A)


def test_unitriangular_per_stratum():
    for d in product(range(4), repeat=2):
        S = enumerate_by_dimvec(d)
        for A in S:
            ce = canonical_element(A)
            for B in ce.pbw:
                assert B == A or prec(B, A)


def test_slices_and_not_covered():
    members = slice(1, 0, 2)
    assert all(ce.tight for ce in members)
    assert all(ce.tight for ce in slice(2, 0, 2))
    assert isinstance(slice_closed_form(M("n=2;1,4:1")), NotCovered)
    assert isinstance(slice_closed_form(M("n=3;1,2:1")), NotCovered)


def test_slice22_equal_case():
    # a = b: c_A = m^(c,d) - m^(c-1,d-1)
    A = M("n=2;1,2:1;1,3:1;2,3:1;2,4:1")
    ce = canonical_element(A)
    assert ce.monomials == {M("n=2;1,2:3;2,3:3"): ONE}


def test_slice21_explicit_sum_equals_monomial_combination():
    for a, b, c in product(range(1, 4), repeat=3):
        for A in (M(f"n=2;1,2:{a};1,3:{c};2,3:{b}"), M(f"n=2;1,2:{a};2,3:{b};2,4:{c}")):
            assert slice_closed_form(A).pbw == slice21_monomial_pbw(A)


def test_json_round_trip():
    for A in _all(2, 4):
        ce = canonical_element(A)
        assert CanonicalElement.from_json(ce.to_json()) == ce


def test_latex():
    tex = canonical_element(M("n=2;1,2:2;1,3:1;2,3:1")).to_latex()
    assert tex.startswith("c_{\\begin{psmallmatrix}0 & 2 & 1")
    assert "(v^{-2} + v^{-4})" in tex


def test_concurrent_computation_is_deterministic():
    canonical.clear_cache()
    mats = list(_all(2, 4))
    with ThreadPoolExecutor(max_workers=8) as ex:
        first = list(ex.map(canonical_element, mats))
    canonical.clear_cache()
    second = [canonical_element(A) for A in mats]
    assert first == second

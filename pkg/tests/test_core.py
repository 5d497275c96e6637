from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclichall.core import (CyclicMatrix, deg_leq, delta, dim_vector, end_dim,
                             enumerate_by_dimvec, euler_form, ext_dim, hom_dim,
                             is_strongly_periodic, loewy_length, parse_matrix,
                             periodicity, poset_ideal, preceq, relabel,
                             segment_matrix, semisimple, sigma, total_dim)
from cyclichall.errors import ParseError, ValidationError
from cyclichall.oracle import ext_dim_oracle, hom_dim_oracle
from strategies import matrices


def M(text):
    return parse_matrix(text)


def test_text_round_trip_and_zero():
    A = M("n=2;1,3:1;1,2:2")
    assert A.to_text() == "n=2;1,2:2;1,3:1;"
    assert M("n=3;").is_zero()
    assert CyclicMatrix.zero(3).to_text() == "n=3;"


@pytest.mark.parametrize("bad,token", [
    ("n=2;1,2:x", "1,2:x"), ("n=2;3,4:1", "3,4:1"), ("n=2;1,1:1", "1,1:1"),
    ("m=2;", None), ("n=2;1,2:1;1,2:1", "1,2:1"),
])
def test_parse_errors_name_token(bad, token):
    with pytest.raises(ParseError) as exc:
        parse_matrix(bad)
    if token:
        assert exc.value.token == token
        assert bad.index(token, 4 if bad.count(token) == 1 else len(bad) - len(token)) == exc.value.position


def test_periodic_lookup():
    A = M("n=2;1,3:4")
    assert A.get(3, 5) == 4
    assert A.get(-1, 1) == 4


def test_dim_vector_examples():
    assert dim_vector(M("n=2;1,3:1")) == (1, 1)
    assert dim_vector(M("n=3;1,5:2")) == (4, 2, 2)
    assert total_dim(M("n=3;1,5:2")) == 8


def test_worked_example_invariants():
    A = CyclicMatrix.from_core([[0, 1, 1, 0, 3, 1, 2, 1, 3],
                                [0, 0, 0, 2, 3, 1, 0, 1, 1],
                                [0, 0, 0, 3, 0, 1, 1, 1, 0]])
    assert (periodicity(A), loewy_length(A)) == (4, 8)


def test_hom_end_examples():
    S1, S2 = (1, 1), (2, 1)
    assert hom_dim(2, S1, S1) == 1
    assert hom_dim(2, S1, S2) == 0
    assert hom_dim(2, (1, 2), (1, 2)) == 1
    assert (end_dim(M("n=2;1,2:2")), delta(M("n=2;1,2:2"))) == (4, 2)
    assert (end_dim(M("n=2;1,3:1")), delta(M("n=2;1,3:1"))) == (1, -1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hom_ext_closed_form_matches_oracle(n):
    for i, j in product(range(1, n + 1), repeat=2):
        for l, m in product(range(1, 9), repeat=2):
            assert hom_dim(n, (i, l), (j, m)) == hom_dim_oracle(n, (i, l), (j, m))
            assert ext_dim(n, (i, l), (j, m)) == ext_dim_oracle(n, (i, l), (j, m))


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_delta_semisimple(alpha):
    assert delta(semisimple(alpha)) == sum(a * a for a in alpha) - sum(alpha)


def test_enumerate_examples():
    assert enumerate_by_dimvec((1, 0)) == [M("n=2;1,2:1")]
    assert len(enumerate_by_dimvec((1, 1))) == 3
    assert enumerate_by_dimvec((0, 0)) == [CyclicMatrix.zero(2)]


def _partition_count(n, d):
    # independent count: multisets of segments with dimension vector d
    segs = [(i, l) for i in range(1, n + 1) for l in range(1, sum(d) + 1)]

    def dv(i, l):
        out = [0] * n
        for k in range(l):
            out[(i - 1 + k) % n] += 1
        return out

    def rec(k, rest):
        if not any(rest):
            return 1
        if k == len(segs):
            return 0
        total = 0
        w = dv(*segs[k])
        r = list(rest)
        while all(x >= 0 for x in r):
            total += rec(k + 1, r)
            r = [x - y for x, y in zip(r, w)]
        return total

    return rec(0, list(d))


@pytest.mark.parametrize("n", [2, 3])
def test_enumerate_sizes(n):
    for d in product(range(4), repeat=n):
        if sum(d) <= 5:
            mods = enumerate_by_dimvec(d)
            assert len(mods) == len(set(mods)) == _partition_count(n, d)
            assert all(dim_vector(A) == d for A in mods)


def test_poset_ideal_examples():
    A = M("n=2;1,2:1;1,3:1;2,3:1;2,4:1")
    assert len(poset_ideal(A)) == 4
    assert poset_ideal(M("n=2;1,2:1")) == [M("n=2;1,2:1")]
    # the split extension degenerates from S_1[2]; S_2[2] is incomparable
    assert poset_ideal(M("n=2;1,3:1")) == [M("n=2;1,2:1;2,3:1"), M("n=2;1,3:1")]


@pytest.mark.parametrize("n,top", [(2, 5), (3, 4)])
def test_degeneration_order_is_partial_order(n, top):
    for d in product(range(top + 1), repeat=n):
        if not 0 < sum(d) <= top:
            continue
        S = enumerate_by_dimvec(d)
        for A in S:
            assert deg_leq(A, A)
            for B in S:
                if A != B and deg_leq(A, B):
                    assert not deg_leq(B, A)
                    for C in S:
                        if deg_leq(B, C):
                            assert deg_leq(A, C)


@given(matrices(), st.integers(1, 3), st.integers(1, 6))
def test_sigma_shift_invariant(A, i, k):
    j = i + k
    assert sigma(A, i, j) == sigma(A, i + A.n, j + A.n)


@given(matrices(n=2, max_len=3), matrices(n=2, max_len=3))
def test_preceq_window_is_enough(A, B):
    wide = all(sigma(B, i, j) <= sigma(A, i, j)
               for i in range(1, 3) for j in range(i + 1, i + 12))
    assert preceq(B, A) == wide


@given(matrices())
def test_periodicity_bounds(A):
    assert periodicity(A) <= loewy_length(A)
    if is_strongly_periodic(A):
        assert periodicity(A) == loewy_length(A)


@given(matrices(), matrices())
def test_euler_form_is_hom_minus_ext(A, B):
    if A.n != B.n:
        return
    hom = sum(a * b * hom_dim(A.n, s, t) for s, a in A.segments() for t, b in B.segments())
    ext = sum(a * b * ext_dim(A.n, s, t) for s, a in A.segments() for t, b in B.segments())
    assert hom - ext == euler_form(dim_vector(A), dim_vector(B))


def test_relabel_and_segment():
    assert relabel(segment_matrix(2, 1, 2), 1) == M("n=2;2,4:1")
    with pytest.raises(ValidationError):
        CyclicMatrix(2, {(2, 1): 1})

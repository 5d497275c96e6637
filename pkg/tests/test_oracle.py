from itertools import product

import numpy as np
import pytest

from cyclichall.core import CyclicMatrix, enumerate_by_dimvec, parse_matrix, relabel
from cyclichall.errors import BudgetExceeded
from cyclichall.oracle import (build_rep, count_block_rref, count_block_rref_explicit,
                               count_submodules, iso_type, iso_type_from_kernels,
                               rank_mod, rref_enumerate)

M = parse_matrix


def test_build_rep_examples():
    r = build_rep(M("n=2;1,3:1"), 2)
    assert r.dims == (1, 1)
    assert r.arrows[0].tolist() == [[1]] and r.arrows[1].tolist() == [[0]]
    assert build_rep(M("n=2;1,2:2"), 2).dims == (2, 0)
    assert build_rep(M("n=3;1,5:2;2,3:1"), 3).is_nilpotent()


def test_rref_examples():
    assert len(list(rref_enumerate(1, 2, 2))) == 3
    assert len(list(rref_enumerate(0, 4, 3))) == 1
    assert len(list(rref_enumerate(2, 4, 2))) == 35
    for R in rref_enumerate(2, 4, 3):
        assert rank_mod(R, 3) == 2


def _all_small(n, top):
    for d in product(range(top + 1), repeat=n):
        if 0 < sum(d) <= top:
            yield from enumerate_by_dimvec(d)


@pytest.mark.parametrize("n,top", [(2, 5), (3, 4)])
def test_iso_type_round_trip(n, top):
    for A in _all_small(n, top):
        assert iso_type(build_rep(A, 2)) == A


def _invertible(k, q, rng):
    while True:
        P = rng.integers(0, q, size=(k, k))
        if k == 0 or rank_mod(P, q) == k:
            return P


def _inverse(P, q):
    k = P.shape[0]
    aug = np.concatenate([P % q, np.eye(k, dtype=np.int64)], axis=1)
    for c in range(k):
        piv = next(r for r in range(c, k) if aug[r, c])
        aug[[c, piv]] = aug[[piv, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), q - 2, q) % q
        for r in range(k):
            if r != c:
                aug[r] = (aug[r] - aug[r, c] * aug[c]) % q
    return aug[:, k:]


def test_iso_type_conjugation_invariant():
    rng = np.random.default_rng(7)
    for A in _all_small(3, 4):
        rep = build_rep(A, 3)
        Ps = [_invertible(d, 3, rng) for d in rep.dims]
        arrows = [(Ps[(v + 1) % 3] @ F @ _inverse(Ps[v], 3)) % 3 if F.size else F
                  for v, F in enumerate(rep.arrows)]
        assert iso_type_from_kernels(3, rep.dims, arrows, 3) == A


def test_count_submodules_examples():
    S1, S2 = M("n=2;1,2:1"), M("n=2;2,3:1")
    assert count_submodules(M("n=2;1,2:2"), S1, S1, 2) == 3
    assert count_submodules(M("n=2;1,3:1"), S1, S2, 3) == 1
    assert count_submodules(M("n=2;1,3:1"), S2, S1, 2) == 0


def test_count_relabel_invariant():
    for A in _all_small(3, 3):
        d = [0, 0, 0]
        for (i, j), a in A.items():
            for k in range(i, j):
                d[(k - 1) % 3] += a
        for c in product(*(range(x + 1) for x in d)):
            for C in enumerate_by_dimvec(c):
                for B in enumerate_by_dimvec(tuple(x - y for x, y in zip(d, c))):
                    assert count_submodules(A, B, C, 2) == count_submodules(
                        relabel(A, 1), relabel(B, 1), relabel(C, 1), 2)


def test_block_counts_agree():
    assert count_block_rref([2], [1], 2) == 3
    assert count_block_rref([2, 3], [0, 0], 3) == 1
    assert count_block_rref([1, 1], [1, 0], 2) == 2
    for a in product(range(3), repeat=2):
        for d in product(*(range(x + 1) for x in a)):
            for q in (2, 3):
                assert count_block_rref(a, d, q) == count_block_rref_explicit(a, d, q)


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_submodules(M("n=2;1,2:6"), M("n=2;1,2:3"), M("n=2;1,2:3"), 5, budget=10)


def test_rejects_prime_powers():
    from cyclichall.errors import ValidationError
    with pytest.raises(ValidationError):
        build_rep(M("n=2;1,2:1"), 4)

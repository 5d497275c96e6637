from itertools import product

import pytest

from cyclichall.coeff import QPoly, eval_q, q
from cyclichall.core import CyclicMatrix, parse_matrix
from cyclichall.hallpoly import (gamma, hall_number_semisimple_top, hall_polynomial,
                                 semisimple_top_modules, word_expand_q)
from cyclichall.oracle import count_submodules
from cyclichall.words import distinguished_word, parse_word

M = parse_matrix


def test_examples():
    S1 = M("n=2;1,2:1")
    assert hall_polynomial(M("n=2;1,2:2"), S1, S1) == q + 1
    assert word_expand_q(parse_word(2, "1.1")).coeff(M("n=2;1,2:2")) == q + 1
    assert gamma(parse_word(2, "1^2"), M("n=2;1,2:2")) == QPoly.const(1)
    assert hall_polynomial(S1, CyclicMatrix.zero(2), S1) == QPoly.const(1)
    assert hall_polynomial(S1, S1, S1) == QPoly()


def test_gamma_of_distinguished_word_is_one():
    for A in (M("n=2;1,3:2;2,3:1"), M("n=3;1,4:1;2,3:2"), M("n=2;1,3:1;2,4:1")):
        assert gamma(distinguished_word(A), A) == QPoly.const(1)


def test_semisimple_top_formula_against_oracle():
    for a in product(range(3), repeat=2):
        for d in product(*(range(x + 1) for x in a)):
            if sum(a) == 0 or sum(a) + len(a) > 6:
                continue
            L, S, N = semisimple_top_modules(2, 1, a, d)
            phi = hall_number_semisimple_top(1, a, d)
            for x in (2, 3):
                assert eval_q(phi, x) == count_submodules(L, S, N, x)


def test_interpolation_degree_bound():
    # three sample points pin down polynomials of degree <= 2 exactly
    A, B, C = M("n=2;1,2:2;2,3:1"), M("n=2;1,2:1"), M("n=2;1,2:1;2,3:1")
    phi = hall_polynomial(A, B, C)
    assert phi.degree() <= 2
    assert [eval_q(phi, x) for x in (2, 3, 5)] == [count_submodules(A, B, C, x) for x in (2, 3, 5)]

"""
Hall polynomials
================

phi^A_{B,C}(q) counts submodules N of M(A) with N ~ M(C) and M(A)/N ~ M(B).
"""

from cyclichall.core import parse_matrix
from cyclichall.hallpoly import hall_polynomial, all_triples
from cyclichall.oracle import count_submodules
from cyclichall.coeff import eval_q

A = parse_matrix("n=2;1,2:1;1,4:1")
B = parse_matrix("n=2;1,2:1")
C = parse_matrix("n=2;1,4:1")
phi = hall_polynomial(A, B, C)
print(phi, [eval_q(phi, q) for q in (2, 3, 5)], [count_submodules(A, B, C, q) for q in (2, 3, 5)])

# triples of total dimension <= 3 for n = 3 whose polynomial is not constant
for A, B, C in all_triples(3, 3):
    phi = hall_polynomial(A, B, C)
    if phi.degree() >= 1:
        print(A, "|", B, "|", C, "->", phi)

"""
Multiplying by semisimple generators
====================================

Matrices are written by their core, text form `n=<n>;i,j:a;...` where the
entry (i, j) counts copies of the segment with top i and length j - i.
"""

from cyclichall.core import parse_matrix, dim_vector
from cyclichall.hallmult import mult_semisimple_q, mult_semisimple_twisted, mult_twisted_via_untwisted
from cyclichall.oracle import count_submodules
from cyclichall.coeff import eval_q

S1 = parse_matrix("n=2;1,2:1")
S2 = parse_matrix("n=2;2,3:1")
print("dim S_1[2] =", dim_vector(parse_matrix("n=2;1,3:1")))

# u_{S_1} * u_{S_1}: one coefficient, q + 1 (the lines in a plane)
print(mult_semisimple_q((1, 0), S1))

# u_{S_1} * u_{S_2}: split and non-split extension, both with coefficient 1
X = mult_semisimple_q((1, 0), S2)
print(X)

# each coefficient counts submodules over F_q; check against brute force
for C, c in X.items():
    print(C, [eval_q(c, q) for q in (2, 3)], [count_submodules(C, S1, S2, q) for q in (2, 3)])

# twisted version, coefficients in v
print(mult_semisimple_twisted((2, 0), S2))
print(mult_semisimple_twisted((2, 0), S2) == mult_twisted_via_untwisted((2, 0), S2))

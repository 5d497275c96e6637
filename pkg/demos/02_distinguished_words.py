"""
Distinguished words
===================

Replays both word algorithms on an n = 3 matrix with periodicity 4 and
Loewy length 8, then folds the word back into the matrix.
"""

from cyclichall.core import CyclicMatrix, periodicity, loewy_length
from cyclichall.words import distinguished_pair, trace_lines, distinguished_word, wp, pyramidic_to_matrix

A = CyclicMatrix.from_core([[0, 1, 1, 0, 3, 1, 2, 1, 3],
                            [0, 0, 0, 2, 3, 1, 0, 1, 1],
                            [0, 0, 0, 3, 0, 1, 1, 1, 0]])
print("p =", periodicity(A), " l =", loewy_length(A))

A1, A2 = distinguished_pair(A)
print("periodic part  ", A1.to_core())
print("aperiodic part ", A2.to_core())

for line in trace_lines(A):
    print(line)

w = distinguished_word(A)
print(wp(w) == A)

# n = 2: an increasing-then-decreasing exponent sequence gives an aperiodic matrix
B = pyramidic_to_matrix(1, (2, 3, 5, 8, 9, 6, 4, 3, 1))
print(B.to_core())
print(distinguished_word(B))

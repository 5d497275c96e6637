"""
Canonical basis elements for n = 2
==================================

c_A is bar-invariant and equals u~_A plus lower terms with coefficients in
v^-1 Z[v^-1].  Two routes compute it; the closed forms cover the slices
with Loewy length at most 2.
"""

from cyclichall.core import parse_matrix
from cyclichall.canonical import (monomial_expand, canonical_element, canonical_element_ic,
                                  slice_closed_form, slice, is_tight)

A = parse_matrix("n=2;1,2:1;1,3:1;2,3:1")
print(monomial_expand(A))

# (0 a c; 0 0 b) with a > b is not a tight monomial
B = parse_matrix("n=2;1,2:2;1,3:1;2,3:1")
ce = canonical_element(B)
print(ce.pbw)
print(ce.monomials)
print(ce == canonical_element_ic(B) == slice_closed_form(B))
print(ce.to_latex())

# tightness across the (2,1) slice
for ce in slice(2, 1, 2):
    print(ce.A, "tight" if is_tight(ce.A) else "not tight")

# Loewy length 3 has no closed form here, but the algorithm still runs
D = parse_matrix("n=2;1,4:1;2,3:1")
print(slice_closed_form(D))
print(canonical_element(D).pbw)

"""Monomial expansions and canonical basis elements of the twisted algebra.

Every matrix A gets a monomial m(A): the ordered product of divided powers
read off its distinguished word.  m(A) is u~_A plus terms strictly below A,
and the canonical element c_A is the unique bar-invariant combination whose
lower coefficients lie in v^-1 Z[v^-1].  Two independent routes compute it.
"""

from dataclasses import dataclass, field

from .coeff import LaurentPoly, gauss_sq, gauss_sym, pi_decompose
from .core import (CyclicMatrix, dim_vector, loewy_length, periodicity,
                   poset_ideal, prec, sigma, sort_key)
from .errors import LeadingCoefficientNotOne, NonTermination, ValidationError
from .hallmult import HallVector, fold
from .hallpoly import _Memo
from .words import distinguished_word

_memo = _Memo()


def monomial_expand(A):
    return _memo.get(("m", A), lambda: _monomial(A))


def _monomial(A):
    start = HallVector.basis_element("utilde", CyclicMatrix.zero(A.n))
    X = fold(distinguished_word(A).alphas(), start, twisted=True)
    if X.coeff(A) != LaurentPoly.const(1):
        raise LeadingCoefficientNotOne(f"coefficient {X.coeff(A)} at {A}")
    return X


@dataclass
class CanonicalElement:
    """c_A = sum_B pbw[B] u~_B = m(A) - sum_B monomials[B] m(B)."""
    A: CyclicMatrix
    pbw: dict
    monomials: dict = field(default_factory=dict)

    @property
    def tight(self):
        return not self.monomials

    def __eq__(self, other):
        if not isinstance(other, CanonicalElement):
            return NotImplemented
        return (self.A == other.A and self.pbw == other.pbw
                and self.monomials == other.monomials)

    def as_vector(self):
        return HallVector("utilde", self.A.n, self.pbw)

    def to_json(self):
        def rows(d, key):
            return [{"B": B.to_text(), key: c.to_json()}
                    for B, c in sorted(d.items(), key=lambda kv: kv[0].to_text())]
        return {"A": self.A.to_text(), "pbw": rows(self.pbw, "p"),
                "monomials": rows(self.monomials, "h"), "tight": self.tight}

    @classmethod
    def from_json(cls, obj):
        from .core import parse_matrix
        pbw = {parse_matrix(r["B"]): LaurentPoly.from_json(r["p"]) for r in obj["pbw"]}
        mon = {parse_matrix(r["B"]): LaurentPoly.from_json(r["h"]) for r in obj["monomials"]}
        return cls(parse_matrix(obj["A"]), pbw, mon)

    def to_latex(self):
        terms = []
        rest = sorted((B for B in self.pbw if B != self.A), key=lambda B: B.to_text())
        for B in [self.A] + rest:
            c = self.pbw[B]
            coef = "" if c == 1 else f"({latex_poly(c)})"
            terms.append(f"{coef}\\widetilde{{u}}_{{{latex_matrix(B)}}}")
        return f"c_{{{latex_matrix(self.A)}}} = " + " + ".join(terms)


def latex_poly(f):
    if f.is_zero():
        return "0"
    out = ""
    for e, a in sorted(f.items(), reverse=True):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        mono = "" if e == 0 else ("v" if e == 1 else f"v^{{{e}}}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        out += f" {sign} {body}" if out else ("-" if a < 0 else "") + body
    return out


def latex_matrix(A):
    rows = " \\\\ ".join(" & ".join(map(str, r)) for r in A.to_core())
    return f"\\begin{{psmallmatrix}}{rows}\\end{{psmallmatrix}}"


def layers_below(A):
    """Elements strictly below A grouped top-down: each layer is the set of
    maximal elements of what remains."""
    rest = [B for B in poset_ideal(A) if B != A]
    out = []
    while rest:
        top = [B for B in rest if not any(prec(B, C) for C in rest)]
        out.append(sorted(top, key=lambda B: B.to_text()))
        rest = [B for B in rest if B not in top]
    return out


def canonical_element(A):
    return _memo.get(("c", A), lambda: _canonical_subtract(A))


def _canonical_subtract(A):
    X = monomial_expand(A)
    h = {}
    steps = 0
    limit = len(poset_ideal(A))
    for layer in layers_below(A):
        for B in layer:
            c = X.coeff(B)
            if c.in_negative_part():
                continue
            steps += 1
            if steps > limit:
                raise NonTermination(f"subtraction did not stop for {A}")
            hp, _ = pi_decompose(c)
            X = X - monomial_expand(B).scale(hp)
            h[B] = hp
    pbw = dict(X.items())
    _check_canonical(A, pbw)
    return CanonicalElement(A, pbw, h)


def _check_canonical(A, pbw):
    if pbw.get(A) != LaurentPoly.const(1):
        raise AssertionError(f"leading PBW coefficient of c_A is not 1 for {A}")
    for B, c in pbw.items():
        if B != A and not c.in_negative_part():
            raise AssertionError(f"coefficient at {B} not in v^-1 Z[v^-1]")


def _linear_extension(ideal, A):
    # B < C forces a strictly smaller sigma total, so this sorts compatibly
    w = loewy_length(A)
    n = A.n
    def key(B):
        return (sum(sigma(B, i, j) for i in range(1, n + 1) for j in range(i + 1, i + w + 1)),
                B.to_text())
    return sorted(ideal, key=key)


def canonical_element_ic(A):
    """Canonical element from the bar-matrix recursion.

    With H the monomial-to-PBW matrix and G its inverse, the bar involution
    on PBW vectors is R = H bar(G).  The coefficients p solve
    p_B - bar(p_B) = sum_{B < C <= A} R[B, C] bar(p_C) one element at a time.
    """
    ideal = _linear_extension(poset_ideal(A), A)
    H = {C: dict(monomial_expand(C).items()) for C in ideal}
    zero = LaurentPoly()

    def h(B, C):
        return H[C].get(B, zero)

    G = {}
    for C in ideal:
        col = {C: LaurentPoly.const(1)}
        for B in reversed(ideal[:ideal.index(C)]):
            s = zero
            for D, g in col.items():
                s = s + h(B, D) * g
            if s:
                col[B] = -s
        G[C] = col

    def r(B, C):
        s = zero
        for D, g in G[C].items():
            s = s + h(B, D) * g.bar()
        return s

    p = {A: LaurentPoly.const(1)}
    for B in reversed(ideal[:-1]):
        s = zero
        for C, pc in p.items():
            if C != B:
                s = s + r(B, C) * pc.bar()
        if s + s.bar():
            raise AssertionError("bar system is not antisymmetric")
        pb = LaurentPoly({e: a for e, a in s.items() if e < 0})
        if pb:
            p[B] = pb
    # monomial coefficients: c_A = sum_B p_B sum_D G[B][D] m(D)
    coeffs = {}
    for B, pb in p.items():
        for D, g in G[B].items():
            coeffs[D] = coeffs.get(D, zero) + g * pb
    mons = {D: -c for D, c in coeffs.items() if D != A and c}
    if coeffs.get(A) != LaurentPoly.const(1):
        raise AssertionError("monomial coefficient of m(A) is not 1")
    _check_canonical(A, p)
    return CanonicalElement(A, p, mons)


def is_tight(A):
    return canonical_element(A).tight


def contributing_set(A):
    """The matrices B whose monomials enter c_A with nonzero coefficient."""
    return sorted(canonical_element(A).monomials, key=lambda B: B.to_text())


# ---- closed forms for n = 2 -------------------------------------------------

class NotCovered:
    """Marker returned when A lies outside the tabulated slices."""

    def __init__(self, A, reason):
        self.A = A
        self.reason = reason

    def __repr__(self):
        return f"NotCovered({self.A.to_text()!r}, {self.reason!r})"

    def __bool__(self):
        return False


def slice_key(A):
    return loewy_length(A), periodicity(A)


def slice_members(l, p, bound=3):
    """All n = 2 matrices with Loewy length l, periodicity p, entries <= bound."""
    from itertools import product
    keys = [(i, i + k) for k in range(1, l + 1) for i in (1, 2)]
    out = []
    for vals in product(range(bound + 1), repeat=len(keys)):
        A = CyclicMatrix(2, dict(zip(keys, vals)))
        if slice_key(A) == (l, p):
            out.append(A)
    return sorted(out, key=sort_key)


def slice(l, p, bound=3):
    return [canonical_element(A) for A in slice_members(l, p, bound)]


def a_k(a, b, c, d, k1, k2):
    """The matrix (0 a+c+d-k1-k2 k1 0; 0 0 b+c+d-k1-k2 k2)."""
    return CyclicMatrix(2, {(1, 2): a + c + d - k1 - k2, (1, 3): k1,
                            (2, 3): b + c + d - k1 - k2, (2, 4): k2})


def mk1k2(a, b, c, d, k1, k2):
    """Closed PBW expansion of the monomial of a_k(a, b, c, d, k1, k2)."""
    out = {}
    for t1 in range(k1 + 1):
        for t2 in range(k2 + 1):
            e = (a - b - k1 + k2 + t1 - t2) * (k1 - k2 - t1 + t2)
            c1 = gauss_sq(a + c + d - t1 - t2, k1 - t1).bar()
            c2 = gauss_sq(b + c + d - t1 - t2, k2 - t2).bar()
            coef = (c1 * c2).shift(e)
            if coef:
                out[a_k(a, b, c, d, t1, t2)] = coef
    return out


def _combine(a, b, c, d, combo, A):
    """CanonicalElement from {(k1, k2): coefficient of m^(k1,k2)}."""
    pbw = {}
    for (k1, k2), x in combo.items():
        for B, y in mk1k2(a, b, c, d, k1, k2).items():
            pbw[B] = pbw.get(B, LaurentPoly()) + x * y
    pbw = {B: y for B, y in pbw.items() if y}
    mons = {a_k(a, b, c, d, k1, k2): -x for (k1, k2), x in combo.items()
            if a_k(a, b, c, d, k1, k2) != A and x}
    return CanonicalElement(A, pbw, mons)


def _alternating(s, top, other, step_other):
    # sum_{k=0}^{top} (-1)^{top-k} [s - 1 + top - k, s - 1] at (k, other)
    return {(k, other): gauss_sym(s - 1 + top - k + step_other, s - 1) * (-1) ** (top - k)
            for k in range(top + 1)}


def _swap(A):
    return CyclicMatrix(2, {(i + 1, j + 1): x for (i, j), x in A.items()})


def _swap_element(ce):
    return CanonicalElement(_swap(ce.A), {_swap(B): c for B, c in ce.pbw.items()},
                            {_swap(B): c for B, c in ce.monomials.items()})


def slice_closed_form(A):
    if A.n != 2:
        return NotCovered(A, "closed forms exist for n = 2 only")
    l, p = slice_key(A)
    one = LaurentPoly.const(1)
    if l == 1:
        return CanonicalElement(A, {A: one}, {})
    if l != 2:
        return NotCovered(A, f"slice ({l},{p}) has no closed form here")
    x, y, z, w = A.get(1, 2), A.get(1, 3), A.get(2, 3), A.get(2, 4)
    if p == 0:
        return _slice20(A, x, y, z, w)
    if p == 1:
        if w == 0:
            return _slice21(x, z, y, A)
        return _swap_element(_slice21(z, x, w, _swap(A)))
    return _slice22(x, z, y, w, A)


def _slice20(A, x, y, z, w):
    if w == 0 and z == 0:
        # E_1^(a+b) E_2^(b) with a = x, b = y
        a, b = x, y
        pbw = {CyclicMatrix(2, {(1, 2): a + b - t, (1, 3): t, (2, 3): b - t}):
               LaurentPoly.monomial(-(a + b - t) * (b - t)) for t in range(b + 1)}
        return CanonicalElement(A, pbw, {})
    if w == 0 and x == 0:
        # E_1^(b) E_2^(a+b) with b = y, a = z
        a, b = z, y
        pbw = {CyclicMatrix(2, {(1, 2): b - t, (1, 3): t, (2, 3): a + b - t}):
               LaurentPoly.monomial(-(b - t) * (a + b - t)) for t in range(b + 1)}
        return CanonicalElement(A, pbw, {})
    return _swap_element(_slice20(_swap(A), z, w, x, y))


def _slice21(a, b, c, A):
    """A = (0 a c; 0 0 b) with a, b, c >= 1."""
    if a <= b:
        ce = _combine(a, b, c, 0, {(c, 0): LaurentPoly.const(1)}, A)
        return ce
    combo = {(k, 0): gauss_sym(a - b - 1 + c - k, a - b - 1) * (-1) ** (c - k)
             for k in range(c + 1)}
    ce = _combine(a, b, c, 0, combo, A)
    explicit = {a_k(a, b, c, 0, c - t, 0): gauss_sym(b + t, t).shift(-t * (a + t))
                for t in range(c + 1)}
    return CanonicalElement(A, explicit, ce.monomials)


def slice21_monomial_pbw(A):
    """PBW expansion of the (2,1) monomial combination, for comparison with
    the explicit sum returned by slice_closed_form."""
    x, y, z, w = A.get(1, 2), A.get(1, 3), A.get(2, 3), A.get(2, 4)
    if w == 0:
        return _slice21_combined(x, z, y, A).pbw
    return {_swap(B): c for B, c in _slice21_combined(z, x, w, _swap(A)).pbw.items()}


def _slice21_combined(a, b, c, A):
    if a <= b:
        return _combine(a, b, c, 0, {(c, 0): LaurentPoly.const(1)}, A)
    combo = {(k, 0): gauss_sym(a - b - 1 + c - k, a - b - 1) * (-1) ** (c - k)
             for k in range(c + 1)}
    return _combine(a, b, c, 0, combo, A)


def slice22_combination(a, b, c, d):
    """Coefficients of m^(k1,k2) in c_A for the (2,2) slice."""
    one = LaurentPoly.const(1)
    if a == b:
        combo = {(c, d): one}
        if c >= 1 and d >= 1:
            combo[(c - 1, d - 1)] = -one
        return combo
    if a > b:
        s = a - b
        combo = {(k, d): gauss_sym(s - 1 + c - k, s - 1) * (-1) ** (c - k) for k in range(c + 1)}
        for l1 in range(c):
            key = (l1, d - 1)
            combo[key] = combo.get(key, LaurentPoly()) - gauss_sym(s - 2 + c - l1, s - 1) * (-1) ** (c - 1 - l1)
        return combo
    s = b - a
    combo = {(c, k): gauss_sym(s - 1 + d - k, s - 1) * (-1) ** (d - k) for k in range(d + 1)}
    for l1 in range(d):
        key = (c - 1, l1)
        combo[key] = combo.get(key, LaurentPoly()) - gauss_sym(s - 2 + d - l1, s - 1) * (-1) ** (d - 1 - l1)
    return combo


def _slice22(a, b, c, d, A):
    return _combine(a, b, c, d, slice22_combination(a, b, c, d), A)


def g00(a, b, c, d):
    """Coefficient of u~_(0,0) in the (2,2) closed form, written out directly."""
    if a == b:
        raise ValidationError("g00 is defined for a != b")
    out = LaurentPoly()
    if a > b:
        s = a - b
        for k in range(c + 1):
            out += (gauss_sym(s - 1 + c - k, s - 1) * gauss_sq(a + c + d, k).bar()
                    * gauss_sq(b + c + d, d).bar()).shift((s - k + d) * (k - d)) * (-1) ** (c - k)
        for l1 in range(c):
            out -= (gauss_sym(s - 2 + c - l1, s - 1) * gauss_sq(a + c + d, l1).bar()
                    * gauss_sq(b + c + d, d - 1).bar()).shift((s - l1 + d - 1) * (l1 - d + 1)) * (-1) ** (c - 1 - l1)
        return out
    s = b - a
    for k in range(d + 1):
        out += (gauss_sym(s - 1 + d - k, s - 1) * gauss_sq(a + c + d, c).bar()
                * gauss_sq(b + c + d, k).bar()).shift((s - k + c) * (k - c)) * (-1) ** (d - k)
    for l1 in range(d):
        out -= (gauss_sym(s - 2 + d - l1, s - 1) * gauss_sq(a + c + d, c - 1).bar()
                * gauss_sq(b + c + d, l1).bar()).shift((s - l1 + c - 1) * (l1 - c + 1)) * (-1) ** (d - 1 - l1)
    return out


def clear_cache():
    _memo.clear()

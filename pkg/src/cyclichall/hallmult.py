"""Left multiplication by a semisimple generator.

The untwisted product u_alpha * u_A has coefficients in Z[q]; the twisted
product with u~_A = v^delta(A) u_A has coefficients in Z[v, v^-1].  Both sum
over matrices T with row sums alpha and produce A + T - shift(T), where
shift moves every entry one row down and drops what lands on or below the
diagonal.
"""

from itertools import product

from .coeff import LaurentPoly, QPoly, gauss_q, gauss_sq
from .core import (CyclicMatrix, delta, dim_vector, euler_form, loewy_length,
                   row_vector, semisimple, sort_key)
from .errors import ValidationError

BASES = ("u", "utilde")


class HallVector:
    """Sparse combination of basis symbols u_A ("u") or u~_A ("utilde")."""

    __slots__ = ("basis", "n", "_t")

    def __init__(self, basis, n, terms=None):
        if basis not in BASES:
            raise ValidationError(f"unknown basis {basis!r}")
        self.basis = basis
        self.n = n
        ring = self._ring()
        zero = ring()
        t = {}
        for A, c in (terms.items() if hasattr(terms, "items") else terms or ()):
            if A.n != n:
                raise ValidationError("mismatched n in HallVector")
            if isinstance(c, int):
                c = ring.const(c)
            if not isinstance(c, ring):
                raise ValidationError("coefficient ring does not match basis")
            c = t.get(A, zero) + c
            if c:
                t[A] = c
            else:
                t.pop(A, None)
        self._t = dict(sorted(t.items(), key=lambda kv: sort_key(kv[0])))

    def _ring(self):
        return QPoly if self.basis == "u" else LaurentPoly

    @classmethod
    def basis_element(cls, basis, A):
        return cls(basis, A.n, {A: 1})

    def coeff(self, A):
        return self._t.get(A, self._ring()())

    def items(self):
        return self._t.items()

    def support(self):
        return list(self._t)

    def __len__(self):
        return len(self._t)

    def _compat(self, other):
        if self.basis != other.basis or self.n != other.n:
            raise ValidationError("basis or rank mismatch")

    def __add__(self, other):
        self._compat(other)
        t = dict(self._t)
        for A, c in other._t.items():
            t[A] = t[A] + c if A in t else c
        return HallVector(self.basis, self.n, t)

    def __neg__(self):
        return HallVector(self.basis, self.n, {A: -c for A, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HallVector(self.basis, self.n, {A: c * x for A, x in self._t.items()})

    def __eq__(self, other):
        if not isinstance(other, HallVector):
            return NotImplemented
        return (self.basis, self.n, self._t) == (other.basis, other.n, other._t)

    def __repr__(self):
        body = " + ".join(f"({c})*{A.to_text()}" for A, c in self._t.items())
        return f"HallVector[{self.basis}]({body or '0'})"

    def to_json(self):
        terms = sorted(((A.to_text(), c.to_json()) for A, c in self._t.items()))
        return {"basis": self.basis, "n": self.n,
                "terms": [{"matrix": m, "coeff": c} for m, c in terms]}

    @classmethod
    def from_json(cls, obj):
        from .core import parse_matrix
        basis = obj["basis"]
        ring = QPoly if basis == "u" else LaurentPoly
        return cls(basis, int(obj["n"]),
                   {parse_matrix(t["matrix"]): ring.from_json(t["coeff"]) for t in obj["terms"]})


def hv_add(x, y):
    return x + y


def hv_scale(x, c):
    return x.scale(c)


def hv_coeff(x, A):
    return x.coeff(A)


def tilde_shift(T):
    return CyclicMatrix(T.n, {(i + 1, j): a for (i, j), a in T.items() if j > i + 1})


def _row_choices(total, slots, caps):
    # compositions of `total` into len(slots) parts bounded by caps
    out = []

    def rec(k, rest, acc):
        if k == len(slots):
            if rest == 0:
                out.append(dict(acc))
            return
        for x in range(min(rest, caps[k]), -1, -1):
            if x:
                acc.append((slots[k], x))
            rec(k + 1, rest - x, acc)
            if x:
                acc.pop()

    rec(0, total, [])
    return out


def enumerate_T(alpha, A):
    """Summation domain of the multiplication formula.

    Row i of T has sum alpha_i, t[i, i+1] <= alpha_i and t[i, j] <= a[i+1, j]
    for j > i + 1.  These are exactly the T for which every Gaussian factor
    is nonzero; other T with A + T - shift(T) >= 0 contribute 0.
    """
    alpha = tuple(alpha)
    n = A.n
    if len(alpha) != n or any(x < 0 for x in alpha):
        raise ValidationError("alpha must be a nonnegative vector of length n")
    w = loewy_length(A) + 1
    per_row = []
    for i in range(1, n + 1):
        slots = list(range(i + 1, i + w + 1))
        caps = [alpha[i - 1]] + [A.get(i + 1, j) for j in slots[1:]]
        per_row.append([{(i, j): x for j, x in r.items()}
                        for r in _row_choices(alpha[i - 1], slots, caps)])
    out = []
    for combo in product(*per_row):
        e = {}
        for r in combo:
            e.update(r)
        out.append(CyclicMatrix(n, e))
    return out


def apply_T(A, T):
    return A.combine((1, T), (-1, tilde_shift(T)))


def _window(A, T):
    return max(loewy_length(A), loewy_length(T)) + 2


def untwisted_exponent(A, T):
    n, w = A.n, _window(A, T)
    total = 0
    for i in range(1, n + 1):
        for l in range(i + 1, i + w):
            t_il = T.get(i, l)
            t_i1l = T.get(i + 1, l)
            if not (t_il or t_i1l):
                continue
            for j in range(l + 1, i + w + 1):
                total += A.get(i, j) * t_il - T.get(i, j) * t_i1l
    return total


def twisted_exponent(A, T):
    n, w = A.n, _window(A, T)
    f = 0
    for i in range(1, n + 1):
        for l in range(i + 1, i + w):
            t_il = T.get(i, l)
            if not t_il:
                continue
            for j in range(l, i + w + 1):
                f += A.get(i, j) * t_il - T.get(i - 1, j) * t_il
                if j > l:
                    f += -A.get(i + 1, j) * t_il + T.get(i, j) * t_il
    return f


def _bracket_args(A, T):
    # (c_ij, t_ij) for all entries of T; c = A + T - shift(T)
    C = apply_T(A, T)
    return C, [(C.get(i, j), t) for (i, j), t in T.items()]


def mult_semisimple_q(alpha, X):
    """u_alpha * X in the untwisted Hall algebra; X a matrix or HallVector."""
    if isinstance(X, CyclicMatrix):
        X = HallVector.basis_element("u", X)
    if X.basis != "u":
        raise ValidationError("untwisted product needs basis 'u'")
    out = {}
    for A, cA in X.items():
        for T in enumerate_T(alpha, A):
            e = untwisted_exponent(A, T)
            if e < 0:
                raise AssertionError(f"negative exponent for T={T} A={A}")
            C, args = _bracket_args(A, T)
            c = QPoly.monomial(e)
            for N, t in args:
                c = c * gauss_q(N, t)
            if c:
                c = c * cA
                out[C] = out[C] + c if C in out else c
    return HallVector("u", X.n, out)


def mult_semisimple_twisted(alpha, X):
    """u~_alpha * X in the twisted algebra, via the exponent f(A, T)."""
    if isinstance(X, CyclicMatrix):
        X = HallVector.basis_element("utilde", X)
    if X.basis != "utilde":
        raise ValidationError("twisted product needs basis 'utilde'")
    out = {}
    for A, cA in X.items():
        for T in enumerate_T(alpha, A):
            C, args = _bracket_args(A, T)
            c = LaurentPoly.monomial(twisted_exponent(A, T))
            for N, t in args:
                c = c * gauss_sq(N, t).bar()
            if c:
                c = c * cA
                out[C] = out[C] + c if C in out else c
    return HallVector("utilde", X.n, out)


def mult_twisted_via_untwisted(alpha, A):
    """The twisted product obtained by rescaling the untwisted one.

    u~_alpha u~_A = v^{<alpha, dim A> + delta(S_alpha) + delta(A)} sum_C phi(v^2) v^{-delta(C)} u~_C.
    """
    S = semisimple(alpha)
    base = euler_form(tuple(alpha), dim_vector(A)) + delta(S) + delta(A)
    out = {}
    for C, c in mult_semisimple_q(alpha, A).items():
        out[C] = c.to_laurent().shift(base - delta(C))
    return HallVector("utilde", A.n, out)


def fold(alphas, X, twisted=True):
    """alphas[0] * (alphas[1] * (... * X)) by repeated left multiplication."""
    step = mult_semisimple_twisted if twisted else mult_semisimple_q
    for a in reversed(list(alphas)):
        X = step(a, X)
    return X

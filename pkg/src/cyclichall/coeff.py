"""Exact coefficient rings.

LaurentPoly lives in Z[v, v^-1], QPoly in Z[q].  Both are immutable sparse
maps exponent -> integer.  Gaussian binomials are built by exact division of
products of (x^k - 1) factors and cached.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import NonExactDivision, ValidationError


class _SparsePoly:
    __slots__ = ("_c", "_hash")
    _var = "x"

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for e, a in items:
                e = int(e)
                a = int(a)
                if a:
                    c[e] = c.get(e, 0) + a
                    if not c[e]:
                        del c[e]
        self._check(c)
        self._c = c
        self._hash = None

    def _check(self, c):
        pass

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def const(cls, a):
        return cls({0: a})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)({0: other})
        return NotImplemented

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e):
        return self._c.get(e, 0)

    def exponents(self):
        return sorted(self._c)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = dict(self._c)
        for e, a in o._c.items():
            c[e] = c.get(e, 0) + a
        return type(self)(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return type(self)(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            # only units (signed monomials) are invertible
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("negative power of a non-unit")
            (e, a), = self._c.items()
            return type(self)({-e: a}) ** -k
        out = type(self).const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def shift(self, k):
        return type(self)({e + k: a for e, a in self._c.items()})

    def to_json(self):
        return {str(e): a for e, a in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls({int(k): int(a) for k, a in obj.items()})
        except (AttributeError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad polynomial JSON {obj!r}") from exc

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json()})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(a))
            else:
                x = self._var if e == 1 else f"{self._var}^{e}"
                mono = x if abs(a) == 1 else f"{abs(a)}*{x}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


class LaurentPoly(_SparsePoly):
    __slots__ = ()
    _var = "v"

    def bar(self):
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def in_negative_part(self):
        """True iff every exponent is strictly negative (the ring v^-1 Z[v^-1])."""
        return all(e < 0 for e in self._c)

    def is_bar_symmetric(self):
        return self == self.bar()

    def evaluate(self, v):
        v = Fraction(v)
        return sum((a * v**e for e, a in self._c.items()), Fraction(0))


class QPoly(_SparsePoly):
    __slots__ = ()
    _var = "q"

    def _check(self, c):
        if any(e < 0 for e in c):
            raise ValidationError("QPoly exponents must be nonnegative")

    def to_laurent(self):
        """Substitute q = v^2."""
        return LaurentPoly({2 * e: a for e, a in self._c.items()})

    def degree(self):
        return max(self._c) if self._c else -1


v = LaurentPoly({1: 1})
q = QPoly({1: 1})


def bar(f):
    return f.bar()


def eval_q(p, qval):
    return sum(a * qval**e for e, a in p.items())


def specialize(f, v2):
    """Value of f at v^2 = v2; odd exponents are rejected."""
    if any(e % 2 for e in f.exponents()):
        raise ValidationError("specialize needs only even exponents")
    total = sum((a * Fraction(v2) ** (e // 2) for e, a in f.items()), Fraction(0))
    return int(total) if total.denominator == 1 else total


def laurent_to_q(f):
    """Inverse of QPoly.to_laurent; requires even nonnegative exponents."""
    if any(e % 2 or e < 0 for e in f.exponents()):
        raise ValidationError(f"{f} is not a polynomial in v^2")
    return QPoly({e // 2: a for e, a in f.items()})


def _divmod_dense(num, den):
    # num, den: dicts with min exponent 0; integer long division from the top.
    num = dict(num)
    dlead_e = max(den)
    dlead = den[dlead_e]
    quot = {}
    while num:
        top = max(num)
        if top < dlead_e:
            break
        a = num[top]
        if a % dlead:
            raise NonExactDivision("leading coefficient does not divide")
        c = a // dlead
        shift = top - dlead_e
        quot[shift] = c
        for e, b in den.items():
            k = e + shift
            num[k] = num.get(k, 0) - c * b
            if not num[k]:
                del num[k]
    return quot, num


def exact_divide(f, g):
    """f / g in the Laurent or q ring; raises NonExactDivision otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return type(f)()
    fm, gm = f.min_exp(), g.min_exp()
    fn = {e - fm: a for e, a in f.items()}
    gn = {e - gm: a for e, a in g.items()}
    quot, rem = _divmod_dense(fn, gn)
    if rem:
        raise NonExactDivision(f"{f} is not divisible by {g}")
    out = {e + fm - gm: a for e, a in quot.items()}
    if isinstance(f, QPoly) and any(e < 0 for e in out):
        raise NonExactDivision(f"{f} / {g} leaves the polynomial ring")
    return type(f)(out)


@lru_cache(maxsize=None)
def gauss_q(N, t):
    """[[N, t]] as a polynomial in q."""
    if t < 0:
        raise ValidationError("gaussian lower index must be >= 0")
    if N < 0:
        raise ValidationError("gaussian upper index must be >= 0")
    if t > N:
        return QPoly()
    num = QPoly.const(1)
    den = QPoly.const(1)
    for i in range(1, t + 1):
        num = num * (QPoly.monomial(N - i + 1) - 1)
        den = den * (QPoly.monomial(i) - 1)
    return exact_divide(num, den)


@lru_cache(maxsize=None)
def gauss_sq(N, t):
    """[[N, t]] in v, i.e. gauss_q with q = v^2."""
    return gauss_q(N, t).to_laurent()


@lru_cache(maxsize=None)
def gauss_sym(N, t):
    """Bar-symmetric version v^{-t(N-t)} [[N, t]]."""
    return gauss_sq(N, t).shift(-t * (N - t))


def q_int(m):
    return gauss_q(m, 1)


@lru_cache(maxsize=None)
def q_fact(t):
    if t < 0:
        raise ValidationError("factorial of a negative integer")
    out = QPoly.const(1)
    for m in range(1, t + 1):
        out = out * q_int(m)
    return out


def gauss_fact(t):
    return q_fact(t).to_laurent()


def pi_decompose(f):
    """Split f = h + p with h bar-invariant and p in v^-1 Z[v^-1]."""
    h = {}
    for e, a in f.items():
        if e == 0:
            h[0] = a
        elif e > 0:
            h[e] = h.get(e, 0) + a
            h[-e] = h.get(-e, 0) + a
    hp = LaurentPoly(h)
    return hp, f - hp


# Alternating Gaussian sums. Each function returns (lhs, rhs) so callers can
# check the identity; the k = 0 case reads [k-1+i, k-1] as the Kronecker delta
# at i = 0 (the binomial [i-1, -1]).

def _lower_binom(k, i, bracket):
    if k == 0:
        return LaurentPoly.const(1 if i == 0 else 0)
    return bracket(k - 1 + i, k - 1)


def _sym_or_zero(N, t):
    if t < 0 or N < 0:
        return LaurentPoly()
    return gauss_sym(N, t)


def alternating_sum_single(m, k, delta):
    lhs = LaurentPoly()
    for i in range(delta + 1):
        term = _lower_binom(k, i, gauss_sym) * _sym_or_zero(m, delta - i)
        lhs = lhs + term.shift(i * (m - k)) * (-1) ** i
    rhs = _sym_or_zero(m - k, delta).shift(-k * delta)
    return lhs, rhs


def alternating_sum_double(m, k, delta, n):
    lhs = LaurentPoly()
    for i in range(delta + 1):
        term = _lower_binom(k, i, gauss_sym) * _sym_or_zero(m + n, delta - i)
        lhs = lhs + term.shift(i * (m - k - n)) * (-1) ** i
    rhs = LaurentPoly()
    for t in range(min(delta, n) + 1):
        term = _sym_or_zero(m - k, delta - t) * _sym_or_zero(n, t)
        rhs = rhs + term.shift(-k * (delta - t) - n * delta + t * (m + n))
    return lhs, rhs


def _bar_sq_or_zero(N, t):
    if t < 0 or N < 0:
        return LaurentPoly()
    return gauss_sq(N, t).bar()


def alternating_sum_double_bar(m, k, delta, n):
    """The same identity as alternating_sum_double written with bar[[N, t]]."""
    lhs = LaurentPoly()
    for i in range(delta + 1):
        term = _lower_binom(k, i, _bar_sq_or_zero) * _bar_sq_or_zero(m + n, delta - i)
        e = i * (2 * delta - 2 * n - i - 1) + 2 * delta * (n + k)
        lhs = lhs + term.shift(e) * (-1) ** i
    rhs = LaurentPoly()
    for t in range(min(delta, n) + 1):
        term = _bar_sq_or_zero(m - k, delta - t) * _bar_sq_or_zero(n, t)
        rhs = rhs + term.shift(2 * t * (delta + n + k - t))
    return lhs, rhs

"""Hall polynomials via word expansions and a recursion on the degeneration order."""

import itertools
import threading

from .coeff import QPoly, exact_divide, gauss_q, q_fact
from .core import CyclicMatrix, dim_vector, enumerate_by_dimvec, prec, semisimple
from .errors import ValidationError
from .hallmult import HallVector, fold, mult_semisimple_q
from .words import distinguished_word


class _Memo:
    """Map with get-or-compute; values are deterministic so a lost race is harmless."""

    def __init__(self):
        self._d = {}
        self._lock = threading.Lock()

    def get(self, key, compute):
        with self._lock:
            if key in self._d:
                return self._d[key]
        val = compute()
        with self._lock:
            return self._d.setdefault(key, val)

    def clear(self):
        with self._lock:
            self._d.clear()


_memo = _Memo()


def _letter_steps(w):
    # every exponent-e vertex letter becomes e separate simple steps
    out = []
    for b, e in w.letters:
        if isinstance(b, tuple):
            out.append(b)
        else:
            a = [0] * w.n
            a[b - 1] = 1
            out.extend([tuple(a)] * e)
    return out


def word_expand_q(w, X=None):
    """u_{b_1} * ... * u_{b_m} (* u_X), one simple module per step."""
    if X is None:
        X = CyclicMatrix.zero(w.n)
    return fold(_letter_steps(w), X, twisted=False)


def word_expand_tight_q(w, X=None):
    """The same product with e*S_i taken in one step (divided powers)."""
    if X is None:
        X = CyclicMatrix.zero(w.n)
    return fold(w.alphas(), X, twisted=False)


def word_normalizer(w):
    out = QPoly.const(1)
    for e in w.exponents():
        out = out * q_fact(e)
    return out


def gamma(w, X):
    return exact_divide(word_expand_q(w).coeff(X), word_normalizer(w))


def _dims_add(B, C):
    return tuple(b + c for b, c in zip(dim_vector(B), dim_vector(C)))


def _expansion(B):
    w = distinguished_word(B)
    return _memo.get(("word", B), lambda: word_expand_tight_q(w))


def _product(B, C):
    w = distinguished_word(B)
    return _memo.get(("prod", B, C), lambda: word_expand_tight_q(w, C))


def hall_polynomial(A, B, C):
    """phi^A_{B,C}: counts submodules N of M(A) with N ~ M(C), M(A)/N ~ M(B)."""
    if not (A.n == B.n == C.n):
        raise ValidationError("mismatched n")
    if dim_vector(A) != _dims_add(B, C):
        return QPoly()
    if B.is_zero():
        return QPoly.const(1 if A == C else 0)
    return _memo.get(("phi", A, B, C), lambda: _hall(A, B, C))


def _hall(A, B, C):
    exp = _expansion(B)
    lead = exp.coeff(B)
    val = _product(B, C).coeff(A)
    for B2, c in exp.items():
        if B2 == B:
            continue
        if not prec(B2, B):
            raise AssertionError(f"{B2} in the expansion of {B} is not below it")
        val = val - c * hall_polynomial(A, B2, C)
    return exact_divide(val, lead)


def hall_number_semisimple_top(i, a, d):
    """Number of submodules with semisimple quotient (sum d) S_i.

    L = sum a_t S_i[t] and N = sum (a_t - d_t) S_i[t] + d_t S_{i+1}[t - 1].
    """
    a, d = list(a), list(d)
    if len(a) != len(d) or any(x < 0 or x > y for x, y in zip(d, a)):
        raise ValidationError("need 0 <= d_t <= a_t")
    m = len(a)
    e = sum(d[k] * (a[l] - d[l]) for k in range(m) for l in range(k + 1, m))
    out = QPoly.monomial(e)
    for x, y in zip(a, d):
        out = out * gauss_q(x, y)
    return out


def semisimple_top_modules(n, i, a, d):
    """The modules (L, M, N) described by hall_number_semisimple_top."""
    L, N = {}, {}
    for t, (x, y) in enumerate(zip(a, d), start=1):
        if x:
            L[(i, i + t)] = x
        if x - y:
            N[(i, i + t)] = N.get((i, i + t), 0) + x - y
        if y and t > 1:
            N[(i + 1, i + t)] = N.get((i + 1, i + t), 0) + y
    alpha = [0] * n
    alpha[(i - 1) % n] = sum(d)
    return CyclicMatrix(n, L), semisimple(alpha), CyclicMatrix(n, N)


def all_triples(n, max_dim):
    """Every (A, B, C) with 1 <= total_dim(A) <= max_dim and dim A = dim B + dim C."""
    for tot in range(1, max_dim + 1):
        for d in itertools.product(range(tot + 1), repeat=n):
            if sum(d) != tot:
                continue
            mods = enumerate_by_dimvec(d)
            for c in itertools.product(*(range(x + 1) for x in d)):
                dB = tuple(x - y for x, y in zip(d, c))
                for A in mods:
                    for B in enumerate_by_dimvec(dB):
                        for C in enumerate_by_dimvec(c):
                            yield A, B, C


def clear_cache():
    _memo.clear()

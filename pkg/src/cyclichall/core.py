"""Periodic matrices indexing the nilpotent representations of the cyclic quiver.

A matrix is stored by its core: entries (i, j) with 1 <= i <= n and j > i.
Entry (i, j) with value a stands for a copies of the segment module of top
i and length j - i.  Any other index pair is read through the periodicity
a[i + n, j + n] = a[i, j].
"""

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .errors import ParseError, ValidationError


class Segment(NamedTuple):
    i: int
    l: int


def _reduce(n, i, j):
    k = (i - 1) // n
    return i - k * n, j - k * n


class CyclicMatrix:
    __slots__ = ("n", "_e", "_hash")

    def __init__(self, n, entries=None):
        if n < 2:
            raise ValidationError("cyclic quiver needs n >= 2")
        e = {}
        items = entries.items() if hasattr(entries, "items") else (entries or ())
        for (i, j), a in items:
            i, j = _reduce(n, int(i), int(j))
            if j <= i:
                raise ValidationError(f"entry ({i},{j}) is not strictly upper")
            a = int(a)
            if a < 0:
                raise ValidationError(f"negative entry at ({i},{j})")
            if a:
                e[(i, j)] = e.get((i, j), 0) + a
        self.n = n
        self._e = dict(sorted(e.items()))
        self._hash = None

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def from_core(cls, rows):
        """Build from a displayed core: rows[i-1][j-1] = a_{i,j}."""
        n = len(rows)
        return cls(n, {(i + 1, j + 1): a for i, r in enumerate(rows)
                       for j, a in enumerate(r) if a})

    def to_core(self):
        width = max((j for _, j in self._e), default=self.n)
        return [[self._e.get((i, j), 0) for j in range(1, width + 1)]
                for i in range(1, self.n + 1)]

    def get(self, i, j):
        if j <= i:
            return 0
        return self._e.get(_reduce(self.n, i, j), 0)

    def __getitem__(self, ij):
        return self.get(*ij)

    def items(self):
        return self._e.items()

    def segments(self):
        return [(Segment(i, j - i), a) for (i, j), a in self._e.items()]

    def is_zero(self):
        return not self._e

    def __bool__(self):
        return bool(self._e)

    def __eq__(self, other):
        if not isinstance(other, CyclicMatrix):
            return NotImplemented
        return self.n == other.n and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._e.items())))
        return self._hash

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def combine(self, *terms):
        """self + sum(sign * M) over (sign, M) pairs; raises on negative entries."""
        e = dict(self._e)
        for sign, m in terms:
            if m.n != self.n:
                raise ValidationError("mismatched n")
            for k, a in m._e.items():
                e[k] = e.get(k, 0) + sign * a
        return CyclicMatrix(self.n, e)

    def __add__(self, other):
        return self.combine((1, other))

    def __sub__(self, other):
        return self.combine((-1, other))

    def to_text(self):
        body = "".join(f"{i},{j}:{a};" for (i, j), a in self._e.items())
        return f"n={self.n};{body}"

    __str__ = to_text

    def __repr__(self):
        return f"CyclicMatrix({self.to_text()!r})"

    @classmethod
    def parse(cls, text):
        return parse_matrix(text)


def sort_key(A):
    return (A.n, tuple(A.items()))


def parse_matrix(text):
    """Parse `n=<int>;<i>,<j>:<a>;...`; errors name the bad token and offset."""
    s = text.strip()
    if not s.startswith("n="):
        raise ParseError("matrix text must start with 'n='", s[:8], 0)
    pos = 0
    tokens = []
    for tok in s.split(";"):
        tokens.append((tok, pos))
        pos += len(tok) + 1
    head, hpos = tokens[0]
    try:
        n = int(head[2:])
    except ValueError:
        raise ParseError("bad rank", head, hpos) from None
    if n < 2:
        raise ParseError("rank must be >= 2", head, hpos)
    entries = {}
    for tok, tpos in tokens[1:]:
        if not tok.strip():
            continue
        try:
            ij, a = tok.split(":")
            i, j = ij.split(",")
            i, j, a = int(i), int(j), int(a)
        except ValueError:
            raise ParseError("bad entry", tok, tpos) from None
        if not 1 <= i <= n or j <= i or a < 1:
            raise ParseError("entry out of range", tok, tpos)
        if (i, j) in entries:
            raise ParseError("duplicate entry", tok, tpos)
        entries[(i, j)] = a
    return CyclicMatrix(n, entries)


def segment_matrix(n, i, l, mult=1):
    return CyclicMatrix(n, {(i, i + l): mult})


def semisimple(alpha):
    alpha = tuple(alpha)
    return CyclicMatrix(len(alpha), {(i + 1, i + 2): a for i, a in enumerate(alpha) if a})


def relabel(A, s):
    """Rotate vertex labels by s."""
    return CyclicMatrix(A.n, {(i + s, j + s): a for (i, j), a in A.items()})


def _vertex(n, k):
    return (k - 1) % n + 1


def row_vector(T):
    out = [0] * T.n
    for (i, _), a in T.items():
        out[i - 1] += a
    return tuple(out)


def col_vector(T):
    out = [0] * T.n
    for (_, j), a in T.items():
        out[_vertex(T.n, j) - 1] += a
    return tuple(out)


def segment_dim(n, i, l):
    out = [0] * n
    for k in range(l):
        out[_vertex(n, i + k) - 1] += 1
    return tuple(out)


def dim_vector(A):
    out = [0] * A.n
    for (i, j), a in A.items():
        for k in range(i, j):
            out[_vertex(A.n, k) - 1] += a
    return tuple(out)


def total_dim(A):
    return sum(dim_vector(A))


def loewy_length(A):
    return max((j - i for (i, j) in A._e), default=0)


def periodicity(A):
    for l in range(loewy_length(A), 0, -1):
        if all(A.get(i, i + l) for i in range(1, A.n + 1)):
            return l
    return 0


def is_aperiodic(A):
    return periodicity(A) == 0


def is_strongly_periodic(A):
    p = periodicity(A)
    return p > 0 and p == loewy_length(A)


def is_sincere(alpha):
    return all(a > 0 for a in alpha)


def sigma(A, i, j):
    """Sum of a[s, t] over s <= i, t >= j, including all periodic translates."""
    if i == j:
        raise ValidationError("sigma needs i != j")
    if i > j:
        return 0
    n = A.n
    total = 0
    for (r, c), a in A.items():
        hi = (i - r) // n
        lo = -((c - j) // n)  # ceil((j - c) / n)
        if hi >= lo:
            total += a * (hi - lo + 1)
    return total


def _check_n(A, B):
    if A.n != B.n:
        raise ValidationError("mismatched n")


def preceq(B, A):
    _check_n(A, B)
    w = max(loewy_length(A), loewy_length(B))
    for i in range(1, A.n + 1):
        for j in range(i + 1, i + w + 1):
            if sigma(B, i, j) > sigma(A, i, j):
                return False
    return True


def prec(B, A):
    return B != A and preceq(B, A)


def deg_leq(B, A):
    _check_n(A, B)
    return dim_vector(A) == dim_vector(B) and preceq(B, A)


def deg_lt(B, A):
    return B != A and deg_leq(B, A)


def euler_form(a, b):
    if len(a) != len(b):
        raise ValidationError("mismatched n")
    n = len(a)
    return sum(a[i] * b[i] for i in range(n)) - sum(a[i] * b[(i + 1) % n] for i in range(n))


@lru_cache(maxsize=None)
def hom_dim(n, s, t):
    """dim Hom(S_i[l], S_j[m]).

    A map between uniserials factors as a quotient S_i[k] of the source
    identified with the length-k socle layer S_{j+m-k}[k] of the target, so
    the dimension counts 1 <= k <= min(l, m) with k = j + m - i mod n.
    """
    (i, l), (j, m) = s, t
    r = (j + m - i) % n
    return sum(1 for k in range(1, min(l, m) + 1) if k % n == r)


def ext_dim(n, s, t):
    return hom_dim(n, s, t) - euler_form(segment_dim(n, *s), segment_dim(n, *t))


@lru_cache(maxsize=None)
def end_dim(A):
    segs = A.segments()
    return sum(a * b * hom_dim(A.n, s, t) for s, a in segs for t, b in segs)


def hom_dim_modules(A, B):
    _check_n(A, B)
    return sum(a * b * hom_dim(A.n, s, t) for s, a in A.segments() for t, b in B.segments())


def delta(A):
    return end_dim(A) - total_dim(A)


def all_segments(n, max_length):
    return [Segment(i, l) for l in range(1, max_length + 1) for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def _enumerate(d, max_length):
    n = len(d)
    segs = all_segments(n, max_length)
    dims = [segment_dim(n, *s) for s in segs]
    out = []

    def rec(k, rest, chosen):
        if k == len(segs):
            if not any(rest):
                out.append(CyclicMatrix(n, {(s.i, s.i + s.l): a for s, a in chosen}))
            return
        dk = dims[k]
        cap = min((r // x for r, x in zip(rest, dk) if x), default=0)
        for a in range(cap, -1, -1):
            nrest = tuple(r - a * x for r, x in zip(rest, dk))
            rec(k + 1, nrest, chosen + [(segs[k], a)] if a else chosen)

    rec(0, tuple(d), [])
    return tuple(sorted(out, key=sort_key))


def enumerate_by_dimvec(d, max_length=None):
    """Every matrix with dimension vector d, optionally bounding segment length."""
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise ValidationError("dimension vector must be nonnegative")
    if len(d) < 2:
        raise ValidationError("cyclic quiver needs n >= 2")
    bound = sum(d) if max_length is None else min(max_length, sum(d))
    return list(_enumerate(d, bound))


@lru_cache(maxsize=None)
def _poset_ideal(A):
    # B <= A forces every sigma beyond A's bandwidth to vanish, so segments
    # of B are no longer than the longest segment of A.
    cands = _enumerate(dim_vector(A), loewy_length(A))
    return tuple(B for B in cands if preceq(B, A))


def poset_ideal(A):
    return list(_poset_ideal(A))

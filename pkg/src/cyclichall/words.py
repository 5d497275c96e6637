"""Generic extensions, distinguished words and their algorithms.

A word is a sequence of letters, each either a vertex i (carrying an exponent
e, meaning the semisimple e*S_i) or a sincere dimension vector.  Words are
read right to left: the last letter is the deepest submodule.
"""

from dataclasses import dataclass

from .core import (CyclicMatrix, _vertex, dim_vector, end_dim, is_aperiodic,
                   is_sincere, is_strongly_periodic, loewy_length, periodicity,
                   row_vector, semisimple)
from .errors import (InputNotAperiodic, InputNotStronglyPeriodic,
                     NotPyramidic, NoUniqueMaximum, ParseError, ValidationError)
from .hallmult import apply_T, enumerate_T, tilde_shift


class Word:
    """Tight-form word: tuple of (letter, exponent).

    A letter is an int vertex or a tuple (sincere vector).  Adjacent equal
    vertex letters are merged on construction.
    """

    __slots__ = ("n", "letters")

    def __init__(self, n, letters=()):
        merged = []
        for b, e in letters:
            if isinstance(b, tuple):
                if len(b) != n or not is_sincere(b):
                    raise ValidationError(f"bad sincere letter {b}")
                if e != 1:
                    raise ValidationError("sincere letters carry exponent 1")
            else:
                if not 1 <= b <= n:
                    raise ValidationError(f"vertex {b} out of range")
                if e < 1:
                    raise ValidationError("exponents must be >= 1")
                if merged and merged[-1][0] == b:
                    merged[-1] = (b, merged[-1][1] + e)
                    continue
            merged.append((b, e))
        self.n = n
        self.letters = tuple(merged)

    def alphas(self):
        """Dimension vector of each letter, left to right."""
        out = []
        for b, e in self.letters:
            if isinstance(b, tuple):
                out.append(b)
            else:
                a = [0] * self.n
                a[b - 1] = e
                out.append(tuple(a))
        return out

    def exponents(self):
        return [e for b, e in self.letters if not isinstance(b, tuple)]

    def __add__(self, other):
        if self.n != other.n:
            raise ValidationError("mismatched n")
        return Word(self.n, self.letters + other.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and (self.n, self.letters) == (other.n, other.letters)

    def __hash__(self):
        return hash((self.n, self.letters))

    def __len__(self):
        return len(self.letters)

    def to_text(self):
        parts = []
        for b, e in self.letters:
            if isinstance(b, tuple):
                parts.append("(" + ",".join(map(str, b)) + ")")
            else:
                parts.append(f"{b}^{e}")
        return ".".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Word({self.n}, {self.to_text()!r})"

    @classmethod
    def parse(cls, n, text):
        return parse_word(n, text)


def parse_word(n, text):
    text = text.strip()
    letters = []
    if not text:
        return Word(n)
    pos = 0
    for tok in text.split("."):
        try:
            if tok.startswith("("):
                if not tok.endswith(")"):
                    raise ValueError
                letters.append((tuple(int(x) for x in tok[1:-1].split(",")), 1))
            elif "^" in tok:
                b, e = tok.split("^")
                letters.append((int(b), int(e)))
            else:
                letters.append((int(tok), 1))
        except ValueError:
            raise ParseError("bad letter", tok, pos) from None
        pos += len(tok) + 1
    try:
        return Word(n, letters)
    except ValidationError as exc:
        raise ParseError(str(exc), text, 0) from None


def generic_extension(alpha, A):
    """S_alpha * A: the candidate A + T - shift(T) with least dim End."""
    cands = {apply_T(A, T) for T in enumerate_T(alpha, A)}
    best = min(end_dim(C) for C in cands)
    top = [C for C in cands if end_dim(C) == best]
    if len(top) != 1:
        raise NoUniqueMaximum(f"{len(top)} candidates of minimal End for {alpha} * {A}")
    return top[0]


def wp(w):
    X = CyclicMatrix.zero(w.n)
    for a in reversed(w.alphas()):
        X = generic_extension(a, X)
    return X


def distinguished_pair(A):
    p = periodicity(A)
    n = A.n
    if p == 0:
        return CyclicMatrix.zero(n), A
    low, high = {}, {}
    for (i, j), a in A.items():
        l = j - i
        if l < p:
            low[(i, j)] = low.get((i, j), 0) + a
        else:
            # longer segments feed column j of the p-th diagonal in row j - p
            low[(j - p, j)] = low.get((j - p, j), 0) + a
            if l > p:
                high[(i, j - p)] = a
    return CyclicMatrix(n, low), CyclicMatrix(n, high)


@dataclass(frozen=True)
class Step:
    """One pass of a word algorithm: T is removed and B is the updated matrix."""
    index: int
    row: int
    T: CyclicMatrix
    B: CyclicMatrix
    letter: object
    exponent: int


def diagonal(B, L):
    return CyclicMatrix(B.n, {(i, i + L): B.get(i, i + L) for i in range(1, B.n + 1)})


def strongly_periodic_steps(A):
    if A.is_zero():
        return []
    if not is_strongly_periodic(A):
        raise InputNotStronglyPeriodic(f"{A} is not strongly periodic")
    p = periodicity(A)
    B = A
    steps = []
    for j in range(1, p + 1):
        T = diagonal(B, p - j + 1)
        B = B.combine((-1, T), (1, tilde_shift(T)))
        steps.append(Step(j, 0, T, B, row_vector(T), 1))
    if not B.is_zero():
        raise AssertionError("strongly periodic algorithm left a remainder")
    return steps


def word_strongly_periodic(A):
    return Word(A.n, [(s.letter, 1) for s in strongly_periodic_steps(A)])


def _row_length(B, r):
    return max((j - r for j in range(r + 1, r + loewy_length(B) + 1) if B.get(r, j)), default=0)


def aperiodic_steps(A):
    if not is_aperiodic(A):
        raise InputNotAperiodic(f"{A} is periodic")
    n = A.n
    B = A
    steps = []
    stage = 0
    for L in range(loewy_length(A), 0, -1):
        stage += 1
        while any(B.get(j, j + L) for j in range(1, n + 1)):
            rows = [j for j in range(1, n + 1)
                    if B.get(j, j + L) and not B.get(j + 1, j + 1 + L)]
            if not rows:
                raise AssertionError("full diagonal in an aperiodic matrix")
            j = rows[-1]
            below = _row_length(B, j + 1)
            jp = min(k for k in range(below + 1, L + 1) if B.get(j, j + k))
            T = CyclicMatrix(n, {(j, j + k): B.get(j, j + k) for k in range(jp, L + 1)})
            B = B.combine((-1, T), (1, tilde_shift(T)))
            e = sum(a for _, a in T.items())
            steps.append(Step(stage, j, T, B, j, e))
    return steps


def word_aperiodic(A):
    return Word(A.n, [(s.letter, s.exponent) for s in aperiodic_steps(A)])


def distinguished_word(A):
    A1, A2 = distinguished_pair(A)
    return word_aperiodic(A2) + word_strongly_periodic(A1)


def is_pyramidic(a):
    a = list(a)
    if not a or any(x <= 0 for x in a):
        return False
    k = a.index(max(a))
    return (all(a[i] <= a[i + 1] for i in range(k))
            and all(a[i] >= a[i + 1] for i in range(k, len(a) - 1)))


def attach_tops(e, i, B):
    """Generic extension of e*S_i on top of B (greedy description).

    The e new tops land on the e longest segments starting at vertex i+1;
    any left over become simple summands S_i.
    """
    n = B.n
    r = _vertex(n, i + 1)
    pool = sorted(((j - r, a) for (s, j), a in B.items() if s == r), reverse=True)
    out = dict(B.items())
    left = e
    for l, a in pool:
        if not left:
            break
        k = min(a, left)
        left -= k
        out[(r, r + l)] -= k
        out[(i, i + 1 + l)] = out.get((i, i + 1 + l), 0) + k
    if left:
        out[(i, i + 1)] = out.get((i, i + 1), 0) + left
    return CyclicMatrix(n, out)


def pyramidic_to_matrix(i, a):
    """n = 2 matrix whose monomial is E_i^(a1) E_{i+1}^(a2) ... for a pyramidic a."""
    if not is_pyramidic(a):
        raise NotPyramidic(f"{tuple(a)} is not pyramidic")
    n = 2
    B = CyclicMatrix.zero(n)
    for k in range(len(a) - 1, -1, -1):
        B = attach_tops(a[k], _vertex(n, i + k), B)
    return B


def pyramidic_word(i, a):
    return Word(2, [(_vertex(2, i + k), x) for k, x in enumerate(a)])


def trace_lines(A):
    """Text transcript of both word algorithms on A, one line per step."""
    A1, A2 = distinguished_pair(A)
    out = [f"input {A.to_text()} p={periodicity(A)} l={loewy_length(A)}",
           f"periodic_part {A1.to_text()}", f"aperiodic_part {A2.to_text()}"]
    for s in strongly_periodic_steps(A1):
        out.append(f"periodic i={s.index} T={s.T.to_text()} B={s.B.to_text()} "
                   f"a=({','.join(map(str, s.letter))})")
    for s in aperiodic_steps(A2):
        out.append(f"aperiodic i={s.index} j={s.row} T={s.T.to_text()} B={s.B.to_text()} "
                   f"x={s.letter}^{s.exponent}")
    out.append(f"word {distinguished_word(A).to_text()}")
    return out

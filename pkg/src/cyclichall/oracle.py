"""Brute-force ground truth over small prime fields.

Representations are built explicitly, subspaces are enumerated through
reduced row-echelon forms, and isomorphism types are read off from kernel
dimensions of path maps.  Nothing here uses the closed formulas of the rest
of the package.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

import numpy as np

from .core import CyclicMatrix, _vertex, dim_vector
from .errors import BudgetExceeded, ValidationError

DEFAULT_BUDGET = 10**7


@dataclass
class ConcreteRep:
    n: int
    q: int
    dims: tuple
    arrows: list  # arrows[v] : V_{v+1} <- V_v as dims[v+1] x dims[v], 0-based v

    def is_nilpotent(self):
        M = np.eye(self.dims[0], dtype=np.int64)
        for _ in range(sum(self.dims) + 1):
            for v in range(self.n):
                M = self.arrows[v] @ M % self.q
        return not M.any()


def _check_prime(q):
    if q < 2 or any(q % k == 0 for k in range(2, int(q ** 0.5) + 1)):
        raise ValidationError(f"q={q} is not prime; the oracle works over F_q with q prime")


def build_rep(A, q):
    _check_prime(q)
    n = A.n
    dims = dim_vector(A)
    index = [[] for _ in range(n)]  # index[v] = list of (segment id, position)
    sid = 0
    for (i, j), a in A.items():
        for _ in range(a):
            for pos in range(j - i):
                index[_vertex(n, i + pos) - 1].append((sid, pos))
            sid += 1
    lookup = [{key: k for k, key in enumerate(ix)} for ix in index]
    arrows = []
    for v in range(n):
        w = (v + 1) % n
        F = np.zeros((dims[w], dims[v]), dtype=np.int64)
        for col, (s, pos) in enumerate(index[v]):
            row = lookup[w].get((s, pos + 1))
            if row is not None:
                F[row, col] = 1
        arrows.append(F)
    return ConcreteRep(n, q, tuple(dims), arrows)


def _inv(a, q):
    return pow(int(a), q - 2, q)


def rank_mod(M, q):
    M = np.array(M, dtype=np.int64) % q
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, rows) if M[k, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * _inv(M[r, c], q) % q
        for k in range(rows):
            if k != r and M[k, c]:
                M[k] = (M[k] - M[k, c] * M[r]) % q
        r += 1
        if r == rows:
            break
    return r


def rref_enumerate(m, nn, q):
    """All m x nn matrices over F_q in reduced row-echelon form of rank m."""
    for pivots in combinations(range(nn), m):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, nn)
                if c not in pivots]
        for vals in product(range(q), repeat=len(free)):
            M = np.zeros((m, nn), dtype=np.int64)
            for r, p in enumerate(pivots):
                M[r, p] = 1
            for (r, c), x in zip(free, vals):
                M[r, c] = x
            yield M


def rref_count(m, nn, q):
    return sum(q ** sum(nn - p - 1 - (m - r - 1) for r, p in enumerate(piv))
               for piv in combinations(range(nn), m))


def _pivots(U):
    return [int(np.flatnonzero(row)[0]) for row in U]


def iso_type_from_kernels(n, dims, arrows, q):
    """Isomorphism type of a nilpotent representation.

    h(i, l) = dim Hom(S_i[l], M) is the kernel dimension of the length-l path
    map leaving vertex i.  The increment h(i, l) - h(i, l - 1) counts summands
    of length >= l whose socle sits at vertex i + l - 1, and differencing once
    more isolates summands of length exactly l.
    """
    total = sum(dims)
    if total == 0:
        return CyclicMatrix.zero(n)

    def h(i, l):
        v = (i - 1) % n
        d = dims[v]
        if d == 0:
            return 0
        P = np.eye(d, dtype=np.int64)
        for k in range(l):
            P = arrows[(v + k) % n] @ P % q
        return d - rank_mod(P, q)

    H = {}
    for i in range(1, n + 1):
        for l in range(0, total + 2):
            H[(i, l)] = h(i, l)

    def inc(i, l):
        i = _vertex(n, i)
        return H[(i, l)] - H[(i, l - 1)]

    entries = {}
    for i in range(1, n + 1):
        for l in range(1, total + 1):
            m = inc(i, l) - inc(i - 1, l + 1)
            if m < 0:
                raise ArithmeticError("inconsistent hom fingerprint")
            if m:
                entries[(i, i + l)] = m
    return CyclicMatrix(n, entries)


def iso_type(rep):
    return iso_type_from_kernels(rep.n, rep.dims, rep.arrows, rep.q)


def hom_ext_dims(M, N):
    """(dim Hom(M, N), dim Ext^1(M, N)) from the standard two-term complex.

    d: (phi_v) -> (g_v phi_v - phi_{v+1} f_v) over all arrows v -> v+1;
    Hom is its kernel and Ext^1 its cokernel.
    """
    n, q = M.n, M.q
    blocks = [(N.dims[v], M.dims[v]) for v in range(n)]
    offs = np.cumsum([0] + [a * b for a, b in blocks])
    tblocks = [(N.dims[(v + 1) % n], M.dims[v]) for v in range(n)]
    toffs = np.cumsum([0] + [a * b for a, b in tblocks])
    D = np.zeros((int(toffs[-1]), int(offs[-1])), dtype=np.int64)
    for v in range(n):
        w = (v + 1) % n
        f, g = M.arrows[v], N.arrows[v]
        rN, cM = blocks[v]
        rW, cW = blocks[w]
        tr, tc = tblocks[v]
        # g phi_v : entry (r, c) of the target block is sum_k g[r, k] phi_v[k, c]
        for r in range(tr):
            for c in range(tc):
                row = int(toffs[v]) + r * tc + c
                for k in range(rN):
                    if g[r, k]:
                        D[row, int(offs[v]) + k * cM + c] += g[r, k]
                for k in range(cW):
                    if f[k, c]:
                        D[row, int(offs[w]) + r * cW + k] -= f[k, c]
    rk = rank_mod(D, q) if D.size else 0
    return int(offs[-1]) - rk, int(toffs[-1]) - rk


def hom_dim_oracle(n, s, t, q=2):
    M = build_rep(CyclicMatrix(n, {(s[0], s[0] + s[1]): 1}), q)
    N = build_rep(CyclicMatrix(n, {(t[0], t[0] + t[1]): 1}), q)
    return hom_ext_dims(M, N)[0]


def ext_dim_oracle(n, s, t, q=2):
    M = build_rep(CyclicMatrix(n, {(s[0], s[0] + s[1]): 1}), q)
    N = build_rep(CyclicMatrix(n, {(t[0], t[0] + t[1]): 1}), q)
    return hom_ext_dims(M, N)[1]


def _gauss_count(nn, m, q):
    if m < 0 or m > nn:
        return 0
    num = prod(q ** (nn - i) - 1 for i in range(m))
    den = prod(q ** (i + 1) - 1 for i in range(m))
    return num // den


def _residual(images, U, q):
    # component of each image row outside rowspace(U); U in RREF
    if U.shape[0] == 0:
        return images % q
    piv = _pivots(U)
    return (images - images[:, piv] @ U) % q


def submodule_types(A, sub_dims, q, budget=DEFAULT_BUDGET):
    """Counter of (quotient type, sub type) over submodules with dims sub_dims."""
    rep = build_rep(A, q)
    n, dims = rep.n, rep.dims
    sub_dims = tuple(sub_dims)
    if any(s > d or s < 0 for s, d in zip(sub_dims, dims)):
        return Counter()
    size = prod(_gauss_count(d, s, q) for d, s in zip(dims, sub_dims))
    if size > budget:
        raise BudgetExceeded(f"{size} subspace tuples exceed budget {budget}")
    spaces = [list(rref_enumerate(s, d, q)) for s, d in zip(sub_dims, dims)]
    out = Counter()

    # walk vertices in order, pruning as soon as an arrow leaves the subspace
    def rec(v, chosen):
        if v == n:
            img = (chosen[n - 1] @ rep.arrows[n - 1].T) % q
            if _residual(img, chosen[0], q).any():
                return
            out[_classify(rep, chosen, q)] += 1
            return
        for U in spaces[v]:
            if v > 0:
                img = (chosen[v - 1] @ rep.arrows[v - 1].T) % q
                if _residual(img, U, q).any():
                    continue
            rec(v + 1, chosen + [U])

    rec(0, [])
    return out


def _classify(rep, Us, q):
    n = rep.n
    sub_arrows, quo_arrows = [], []
    pivs = [_pivots(U) for U in Us]
    comp = [[c for c in range(rep.dims[v]) if c not in pivs[v]] for v in range(n)]
    for v in range(n):
        w = (v + 1) % n
        F = rep.arrows[v]
        img = (Us[v] @ F.T) % q  # rows: images of the basis of U_v
        sub_arrows.append(img[:, pivs[w]].T.copy())
        E = np.eye(rep.dims[v], dtype=np.int64)[comp[v]]
        qimg = _residual((E @ F.T) % q, Us[w], q)
        quo_arrows.append(qimg[:, comp[w]].T.copy())
    sub_dims = tuple(U.shape[0] for U in Us)
    quo_dims = tuple(d - s for d, s in zip(rep.dims, sub_dims))
    sub = iso_type_from_kernels(n, sub_dims, sub_arrows, q)
    quo = iso_type_from_kernels(n, quo_dims, quo_arrows, q)
    return quo, sub


_cache = {}


def count_submodules(A, B, C, q, budget=DEFAULT_BUDGET):
    """Number of submodules N of M(A) with N ~ M(C) and M(A)/N ~ M(B)."""
    if not (A.n == B.n == C.n):
        raise ValidationError("mismatched n")
    dC = dim_vector(C)
    if tuple(a - c for a, c in zip(dim_vector(A), dC)) != dim_vector(B):
        return 0
    key = (A, dC, q)
    if key not in _cache:
        _cache[key] = submodule_types(A, dC, q, budget)
    return _cache[key].get((B, C), 0)


def count_block_rref(a, d, q, budget=DEFAULT_BUDGET):
    """Size of the set of full-rank RREF matrices with block pivot pattern.

    Rows come in groups of d_t and columns in groups of a_t; a matrix belongs
    to the set when the pivots of row group t all lie in column group t.
    Pivot patterns are enumerated and each contributes q^(free entries).
    """
    a, d = list(a), list(d)
    if len(a) != len(d) or any(x > y or x < 0 for x, y in zip(d, a)):
        raise ValidationError("need 0 <= d_t <= a_t")
    starts = np.cumsum([0] + a)
    nn = int(starts[-1])
    groups = [combinations(range(int(starts[t]), int(starts[t + 1])), d[t]) for t in range(len(a))]
    total = 0
    count = 0
    for choice in product(*groups):
        piv = [c for g in choice for c in g]
        count += 1
        if count > budget:
            raise BudgetExceeded("block enumeration too large")
        pset = set(piv)
        free = sum(1 for p in piv for c in range(p + 1, nn) if c not in pset)
        total += q**free
    return total


def count_block_rref_explicit(a, d, q, budget=DEFAULT_BUDGET):
    """Same count by listing every RREF matrix and testing the block shape."""
    starts = np.cumsum([0] + list(a))
    nn, m = int(starts[-1]), sum(d)
    if _gauss_count(nn, m, q) > budget:
        raise BudgetExceeded("explicit block enumeration too large")
    row_start = np.cumsum([0] + list(d))
    total = 0
    for M in rref_enumerate(m, nn, q):
        ok = True
        for t in range(len(a)):
            rows = M[int(row_start[t]):int(row_start[t + 1])]
            for s in range(len(a)):
                block = rows[:, int(starts[s]):int(starts[s + 1])]
                if s < t and block.any():
                    ok = False
            diag = rows[:, int(starts[t]):int(starts[t + 1])]
            if d[t] and rank_mod(diag, q) != d[t]:
                ok = False
        total += ok
    return total

"""Exact shortest-vector computation for small rational Gram matrices.

LLL (delta = 3/4) runs directly on the Gram matrix in exact rational
arithmetic, then a depth-first Fincke-Pohst walk enumerates every vector
attaining the minimum.  Dimensions are capped at MAX_ENUM_DIM: this is a
verification tool, not a general SVP solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational

MAX_ENUM_DIM = 24

_LOVASZ = Fraction(3, 4)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric positive definite matrix with exact rational entries."""

    entries: tuple[tuple[Rational | int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        _ldl(rows)  # raises if not positive definite

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ShortVectorReport:
    minimum: Rational
    vectors: tuple[tuple[int, ...], ...]
    span_rank: int


def _ldl(g):
    """Unit lower triangular L and positive diagonal d with G = L diag(d) L^T.

    L doubles as the Gram-Schmidt coefficient matrix mu and d as the squared
    lengths of the orthogonalized vectors.
    """
    n = len(g)
    L = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(g[i][j])
            for k in range(j):
                s -= L[i][k] * L[j][k] * d[k]
            if j < i:
                L[i][j] = s / d[j]
            else:
                if s <= 0:
                    raise ValueError("matrix is not positive definite")
                d[i] = s
                L[i][i] = Fraction(1)
    return L, d


def _row_op(g, t, k, j, q):
    """Basis change b_k <- b_k - q*b_j applied to the Gram matrix and tracker."""
    n = len(g)
    for col in range(n):
        g[k][col] -= q * g[j][col]
    for row in range(n):
        g[row][k] -= q * g[row][j]
    t[k] = [t[k][i] - q * t[j][i] for i in range(n)]


def _swap_rows(g, t, k):
    g[k - 1], g[k] = g[k], g[k - 1]
    for row in g:
        row[k - 1], row[k] = row[k], row[k - 1]
    t[k - 1], t[k] = t[k], t[k - 1]


def lll_reduce(G: GramMatrix) -> tuple[GramMatrix, tuple[tuple[int, ...], ...]]:
    """LLL reduction of the Gram matrix.

    Returns (reduced, U) with U unimodular and reduced = U^T G U; a vector
    with coordinates w in the reduced basis has coordinates U @ w in the
    original one.
    """
    n = G.n
    g = [list(row) for row in G.entries]
    t = [[int(i == j) for j in range(n)] for i in range(n)]
    if n > 1:
        mu, d = _ldl(g)
        k = 1
        while k < n:
            for j in range(k - 1, -1, -1):
                q = math.floor(mu[k][j] + _HALF)
                if q:
                    _row_op(g, t, k, j, q)
                    mu, d = _ldl(g)
            if d[k] >= (_LOVASZ - mu[k][k - 1] ** 2) * d[k - 1]:
                k += 1
            else:
                _swap_rows(g, t, k)
                mu, d = _ldl(g)
                k = max(k - 1, 1)
    u = tuple(tuple(t[i][r] for i in range(n)) for r in range(n))  # transpose
    return GramMatrix(tuple(tuple(row) for row in g)), u


def _walk(mu, d, bound, adapt):
    """Depth-first enumeration of nonzero vectors with form value <= bound.

    With adapt=True the bound tightens to the best value seen, and only
    vectors attaining the final minimum are kept.
    """
    n = len(d)
    x = [0] * n
    found: list[tuple[int, ...]] = []
    state = {"bound": Fraction(bound), "min": None}

    def descend(j, partial):
        if j < 0:
            if not any(x):
                return
            if not adapt:
                found.append(tuple(x))
                return
            q = partial
            cur = state["min"]
            if cur is None or q < cur:
                state["min"] = q
                state["bound"] = q
                found.clear()
                found.append(tuple(x))
            elif q == cur:
                found.append(tuple(x))
            return
        c = Fraction(0)
        for i in range(j + 1, n):
            if x[i]:
                c += mu[i][j] * x[i]
        start = math.floor(_HALF - c)  # nearest integer to -c
        k = start
        while True:
            step = d[j] * (k + c) ** 2
            if partial + step > state["bound"]:
                break
            x[j] = k
            descend(j - 1, partial + step)
            k += 1
        k = start - 1
        while True:
            step = d[j] * (k + c) ** 2
            if partial + step > state["bound"]:
                break
            x[j] = k
            descend(j - 1, partial + step)
            k -= 1
        x[j] = 0

    descend(n - 1, Fraction(0))
    return state["min"], found


def _apply(u, w):
    return tuple(sum(u[r][c] * w[c] for c in range(len(w))) for r in range(len(w)))


def _span_rank(vectors) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / prow[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == ncols:
            break
    return rank


def _check_dim(n):
    if n > MAX_ENUM_DIM:
        raise ValueError(f"dimension {n} exceeds the enumeration guard ({MAX_ENUM_DIM})")


def enumerate_shortest(G: GramMatrix) -> ShortVectorReport:
    """Minimum of the lattice and every vector attaining it.

    The initial enumeration bound is the smallest diagonal entry after LLL,
    which a basis vector always attains.
    """
    _check_dim(G.n)
    red, u = lll_reduce(G)
    mu, d = _ldl([list(row) for row in red.entries])
    bound = min(red.entries[i][i] for i in range(red.n))
    minimum, vecs = _walk(mu, d, bound, adapt=True)
    mapped = sorted(_apply(u, w) for w in vecs)
    return ShortVectorReport(minimum, tuple(mapped), _span_rank(mapped))


def enumerate_within(G: GramMatrix, bound) -> list[tuple[int, ...]]:
    """All nonzero vectors with form value <= bound (original coordinates)."""
    _check_dim(G.n)
    red, u = lll_reduce(G)
    mu, d = _ldl([list(row) for row in red.entries])
    _, vecs = _walk(mu, d, bound, adapt=False)
    return sorted(_apply(u, w) for w in vecs)


def is_wr_nd(G: GramMatrix) -> bool:
    """Well-rounded: minimal vectors span the full dimension."""
    return enumerate_shortest(G).span_rank == G.n

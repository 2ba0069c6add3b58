"""
Exact linear algebra helpers on sympy DomainMatrix.

Subspaces of K^n are handled as lists of row vectors (lists of domain
elements). Canonical bases are the nonzero rows of the reduced row
echelon form, so two subspaces are equal iff their bases are equal.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

Rows = List[list]


def build(rows: Sequence[Sequence], ncols: int, K) -> DomainMatrix:
    rows = [list(r) for r in rows]
    return DomainMatrix(rows, (len(rows), ncols), K)


def identity_rows(n: int, K) -> Rows:
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def rref_rows(rows: Sequence[Sequence], ncols: int, K) -> Tuple[Rows, Tuple[int, ...]]:
    """Nonzero rows of the RREF and the pivot columns."""
    if not rows:
        return [], ()
    R, pivots = build(rows, ncols, K).rref()
    out = R.to_list()[: len(pivots)]
    return out, tuple(pivots)


def span_basis(rows: Sequence[Sequence], ncols: int, K) -> Rows:
    return rref_rows(rows, ncols, K)[0]


def rank_of(rows: Sequence[Sequence], ncols: int, K) -> int:
    return len(rref_rows(rows, ncols, K)[1])


def nullspace_rows(rows: Sequence[Sequence], ncols: int, K) -> Rows:
    """Canonical basis of {v : M v = 0} for M given by its rows."""
    R, pivots = rref_rows(rows, ncols, K)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [K.zero] * ncols
        v[f] = K.one
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return span_basis(basis, ncols, K)


def perp_rows(rows: Sequence[Sequence], ncols: int, K) -> Rows:
    # annihilator under the standard pairing u.v = sum u_i v_i
    if not rows:
        return identity_rows(ncols, K)
    return nullspace_rows(rows, ncols, K)


def transpose_rows(rows: Sequence[Sequence], ncols: int) -> Rows:
    return [[r[j] for r in rows] for j in range(ncols)]


def solve(A: DomainMatrix, Y: DomainMatrix) -> Optional[DomainMatrix]:
    """Some C with A*C == Y (free variables set to zero), or None."""
    m, k = A.shape
    _, n = Y.shape
    K = A.domain
    aug = [ra + ry for ra, ry in zip(A.to_list(), Y.to_list())]
    R, pivots = rref_rows(aug, k + n, K)
    if any(pc >= k for pc in pivots):
        return None
    C = [[K.zero] * n for _ in range(k)]
    for i, pc in enumerate(pivots):
        C[pc] = list(R[i][k:])
    return build(C, n, K)


def rank_factorization(M: DomainMatrix) -> Optional[Tuple[DomainMatrix, DomainMatrix, Tuple[int, ...]]]:
    """M = F*G with F full column rank and G full row rank; None for the zero matrix."""
    m, n = M.shape
    K = M.domain
    G_rows, pivots = rref_rows(M.to_list(), n, K)
    if not pivots:
        return None
    rows = M.to_list()
    F = build([[rows[i][pc] for pc in pivots] for i in range(m)], len(pivots), K)
    G = build(G_rows, n, K)
    return F, G, pivots


def left_inverse(F: DomainMatrix) -> DomainMatrix:
    """L with L*F == I for F of full column rank."""
    m, r = F.shape
    K = F.domain
    _, rows_idx = rref_rows(F.transpose().to_list(), m, K)
    sub = build([F.to_list()[i] for i in rows_idx], r, K).inv().to_list()
    L = [[K.zero] * m for _ in range(r)]
    for c, i in enumerate(rows_idx):
        for row in range(r):
            L[row][i] = sub[row][c]
    return build(L, m, K)


def right_inverse_of_rref(G: DomainMatrix, pivots: Sequence[int]) -> DomainMatrix:
    """For G in RREF with the given pivots, the selector with G*Gr == I."""
    r, n = G.shape
    K = G.domain
    Gr = [[K.zero] * r for _ in range(n)]
    for i, pc in enumerate(pivots):
        Gr[pc][i] = K.one
    return build(Gr, r, K)


def inner_inverse(M: DomainMatrix) -> DomainMatrix:
    """An x with M x M == M, through a rank factorization."""
    n = M.shape[0]
    K = M.domain
    fact = rank_factorization(M)
    if fact is None:
        return DomainMatrix.zeros((M.shape[1], n), K).to_dense()
    F, G, pivots = fact
    return right_inverse_of_rref(G, pivots) * left_inverse(F)


def oblique_projector(onto: Sequence[Sequence], along: Sequence[Sequence], n: int, K) -> DomainMatrix:
    """Matrix of the projection of K^n onto span(onto) along span(along); bases are rows."""
    k = len(onto)
    if k == 0:
        return DomainMatrix.zeros((n, n), K).to_dense()
    cols = list(onto) + list(along)
    B = build(transpose_rows(cols, n), len(cols), K)
    Binv = B.inv().to_list()
    Bs = build(transpose_rows(onto, n), k, K)
    top = build(Binv[:k], n, K)
    return Bs * top

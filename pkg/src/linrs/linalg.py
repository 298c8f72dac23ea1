"""Exact dense linear algebra over a finite field.

Matrices are plain lists of rows.  Every function takes the scalar field
``F`` explicitly; any object with ``add``, ``sub``, ``mul`` and ``inv``
methods and integer elements where ``0``/``1`` are the identities works,
so the same code runs over F_p, F_{p^m} and the embedded subfield F_{p^e}.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def rref(M: Sequence[Sequence[int]], F) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form.

    Pivots are chosen column by column, left to right, taking the topmost
    nonzero entry at or below the current row; the result is therefore a
    deterministic function of ``M``.

    Returns
    -------
    R : list of rows
        Row-equivalent RREF matrix (same shape as ``M``).
    rank : int
    pivot_cols : list of int
    """
    R = [list(row) for row in M]
    n_rows = len(R)
    n_cols = len(R[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        s = F.inv(R[r][c])
        if s != 1:
            R[r] = [F.mul(s, v) for v in R[r]]
        row = R[r]
        for i in range(n_rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(R[i], row)]
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M: Sequence[Sequence[int]], F) -> int:
    return rref(M, F)[1]


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*M)]


def kernel_basis(M: Sequence[Sequence[int]], F, n_cols: int | None = None) -> Matrix:
    """Basis of the right kernel ``{v : M v = 0}``.

    ``n_cols`` is needed only when ``M`` has no rows.  One basis vector is
    produced per free column, with a 1 in that column.
    """
    if n_cols is None:
        n_cols = len(M[0])
    if not M:
        return [[1 if j == i else 0 for j in range(n_cols)] for i in range(n_cols)]
    R, r, pivots = rref(M, F)
    pivot_set = set(pivots)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        v = [0] * n_cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.sub(0, R[i][f])
        basis.append(v)
    return basis


def matvec(M: Sequence[Sequence[int]], v: Sequence[int], F) -> list[int]:
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], F) -> Matrix:
    Bt = transpose(B)
    return [matvec(Bt, row, F) for row in A]


def inverse(M: Sequence[Sequence[int]], F) -> Matrix:
    """Inverse of a square matrix; ValueError if singular."""
    n = len(M)
    aug = [list(row) + [1 if j == i else 0 for j in range(n)] for i, row in enumerate(M)]
    R, r, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]

"""Dense exact linear algebra over F_p for small primes p.

Matrices are numpy int64 arrays with entries reduced into 0..p-1.  Kernels,
solves, and quotient projections all derive from one reduced-row-echelon
routine, so every basis handed out is canonical for its input: rerunning a
computation reproduces it bit for bit.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import InternalInvariantError


def normalize(mat, p: int) -> np.ndarray:
    return np.asarray(mat, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(mat, p: int, pivot_limit: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    ``pivot_limit`` restricts pivot search to the first columns (for
    augmented systems); row operations still span the full width.
    """
    a = normalize(mat, p).copy()
    rows, cols = a.shape
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        pivot_row = None
        for k in range(r, rows):
            if a[k, c]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        for k in range(rows):
            if k != r and a[k, c]:
                a[k] = (a[k] - a[k, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, p: int) -> int:
    return len(rref(mat, p)[1])


def kernel_basis(mat, p: int) -> np.ndarray:
    """Columns form the canonical echelon basis of the right kernel."""
    a = normalize(mat, p)
    r, pivots = rref(a, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for ri, pc in enumerate(pivots):
            basis[pc, j] = (-r[ri, f]) % p
    return basis


def solve(a_mat, b_mat, p: int) -> np.ndarray:
    """One exact solution X of A X = B (free coordinates zero).

    Raises InternalInvariantError on an inconsistent system; callers only
    use this where solvability is guaranteed by construction.
    """
    a = normalize(a_mat, p)
    b = normalize(b_mat, p)
    rows, cols = a.shape
    aug = np.hstack([a, b]) if rows else zeros(0, cols + b.shape[1])
    r, pivots = rref(aug, p, pivot_limit=cols)
    for k in range(len(pivots), rows):
        if r[k, cols:].any():
            raise InternalInvariantError("inconsistent linear system")
    x = zeros(cols, b.shape[1])
    for ri, pc in enumerate(pivots):
        x[pc] = r[ri, cols:]
    return x


def cokernel_projection(mat, p: int) -> np.ndarray:
    """Matrix of the canonical projection F^m -> F^m / colspace(mat).

    Quotient coordinates are read off at the standard basis vectors that are
    not pivot positions of the column space.
    """
    a = normalize(mat, p)
    m = a.shape[0]
    r, pivots = rref(a.T, p)
    nonpiv = [j for j in range(m) if j not in pivots]
    proj = zeros(len(nonpiv), m)
    for col in range(m):
        v = np.zeros(m, dtype=np.int64)
        v[col] = 1
        for t, pc in enumerate(pivots):
            if v[pc]:
                v = (v - v[pc] * r[t]) % p
        proj[:, col] = v[nonpiv]
    return proj


def subspaces(dim: int, p: int) -> list[np.ndarray]:
    """Every subspace of F_p^dim as a canonical RREF row-basis (k x dim).

    Ordered by dimension, then pivot set, then free entries; the zero space
    comes first as a (0 x dim) matrix.
    """
    out = [zeros(0, dim)]
    for k in range(1, dim + 1):
        for piv in combinations(range(dim), k):
            pivset = set(piv)
            free_positions = [
                (i, c) for i in range(k) for c in range(piv[i] + 1, dim) if c not in pivset
            ]
            for vals in product(range(p), repeat=len(free_positions)):
                m = zeros(k, dim)
                for i, c in enumerate(piv):
                    m[i, c] = 1
                for (i, c), v in zip(free_positions, vals):
                    m[i, c] = v
                out.append(m)
    return out


def count_subspaces(dim: int, p: int) -> int:
    """Number of subspaces of F_p^dim (sum of Gaussian binomials)."""
    total = 0
    for k in range(dim + 1):
        num = den = 1
        for t in range(k):
            num *= p ** (dim - t) - 1
            den *= p ** (k - t) - 1
        total += num // den
    return total

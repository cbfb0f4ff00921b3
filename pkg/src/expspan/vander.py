"""Vandermonde matrices and their explicit inverses via Lagrange polynomials.

For distinct nodes lambda_1..lambda_n, the matrix W with rows
(1, lambda_i, ..., lambda_i^{n-1}) is inverted exactly by the matrix U
whose column q holds the power-basis coefficients of the Lagrange
polynomial P_q (the polynomial that is 1 at lambda_q and 0 at the other
nodes).  This route is more accurate for Vandermonde structure than a
generic LU factorization and is used here throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import ensure_distinct


@dataclass(frozen=True)
class LagrangePolynomial:
    """Coefficients (ascending powers) of the cardinal polynomial P_q.

    `index` is the 1-based node index q; P_q(lambda_q) = 1 and
    P_q(lambda_i) = 0 for i != q.
    """

    index: int
    coefficients: tuple[complex, ...]

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class VandermondeInverse:
    """Inverse matrix U with conditioning diagnostics.

    `residual` is the max-entry magnitude of W @ U - I; `min_gap` the
    smallest pairwise node distance; `gap_product` the magnitude of the
    Vandermonde determinant prod_{i<j} |lambda_j - lambda_i|.  Residuals
    should be read against these near degeneracy.
    """

    lambdas: tuple[complex, ...]
    matrix: np.ndarray
    residual: float
    min_gap: float
    gap_product: float


def vandermonde_matrix(lambdas) -> np.ndarray:
    """n x n matrix with rows (1, lambda_i, lambda_i^2, ..., lambda_i^{n-1})."""
    lam = np.asarray([complex(z) for z in lambdas], dtype=complex)
    if lam.size == 0:
        raise ValueError("need at least one node")
    return np.vander(lam, increasing=True)


def lagrange_coefficients(lambdas, q: int) -> LagrangePolynomial:
    """Power-basis coefficients of P_q by synthetic factor multiplication.

    Multiplies the monomial factors (x - lambda_s), s != q, in the
    user-given order, then scales by the inverse of the node products.
    """
    lam = ensure_distinct(lambdas)
    n = len(lam)
    if not (1 <= q <= n):
        raise IndexError(f"q must be in 1..{n}, got {q}")
    lam_q = lam[q - 1]
    coeffs = [complex(1.0)]
    denom = complex(1.0)
    for s, lam_s in enumerate(lam):
        if s == q - 1:
            continue
        # multiply the running polynomial by (x - lam_s)
        coeffs = [0j] + coeffs
        for r in range(len(coeffs) - 1):
            coeffs[r] -= lam_s * coeffs[r + 1]
        denom *= lam_q - lam_s
    scale = 1.0 / denom
    return LagrangePolynomial(index=q, coefficients=tuple(c * scale for c in coeffs))


def vandermonde_inverse(lambdas) -> VandermondeInverse:
    """Explicit inverse of the Vandermonde matrix of the given nodes."""
    lam = tuple(ensure_distinct(lambdas))
    n = len(lam)
    u = np.empty((n, n), dtype=complex)
    for q in range(1, n + 1):
        u[:, q - 1] = lagrange_coefficients(lam, q).coefficients
    w = vandermonde_matrix(lam)
    residual = float(np.max(np.abs(w @ u - np.eye(n)))) if n else 0.0
    gaps = [abs(lam[a] - lam[b]) for a in range(n) for b in range(a + 1, n)]
    u.setflags(write=False)
    return VandermondeInverse(
        lambdas=lam,
        matrix=u,
        residual=residual,
        min_gap=min(gaps) if gaps else math.inf,
        gap_product=float(np.prod(gaps)) if gaps else 1.0,
    )


def solve_transposed(lambdas, rhs) -> np.ndarray:
    """Solve W^T a = rhs as a = U^T rhs (plain transpose, no conjugation)."""
    inv = vandermonde_inverse(lambdas)
    b = np.asarray([complex(v) for v in rhs], dtype=complex)
    if b.shape != (len(inv.lambdas),):
        raise ValueError(f"rhs must have length {len(inv.lambdas)}")
    return inv.matrix.T @ b

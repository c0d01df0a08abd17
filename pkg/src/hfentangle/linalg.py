"""Dense linear algebra for small bipartite systems.

Matrices are plain numpy arrays. The Hermitian eigensolver is a cyclic
Jacobi iteration; for the 6x6 problems in this package it converges in a
handful of sweeps and has a deterministic failure mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-10
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100

Factor = Literal["first", "second"]


@dataclass(frozen=True)
class BipartiteDims:
    """Dimensions of a two-factor Hilbert space.

    Product basis index ``k`` decomposes as ``k = i * d_b + j`` with ``i``
    indexing the first factor and ``j`` the second.
    """

    d_a: int
    d_b: int

    def __post_init__(self):
        if self.d_a < 1 or self.d_b < 1:
            raise DimensionMismatch(f"factor dimensions must be >= 1, got {self}")

    @property
    def total(self) -> int:
        return self.d_a * self.d_b

    @property
    def min_dim(self) -> int:
        return min(self.d_a, self.d_b)

    def check(self, m: np.ndarray) -> None:
        n = self.total
        if m.shape != (n, n):
            raise DimensionMismatch(f"expected a {n}x{n} matrix for {self}, got shape {m.shape}")


class HermitianEigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, ``result[i*db + k, j*db + l] = a[i, j] * b[k, l]``."""
    a = np.asarray(a)
    b = np.asarray(b)
    ra, ca = a.shape
    rb, cb = b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(ra * rb, ca * cb)


def hermiticity_error(m: np.ndarray) -> float:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.conj().T)))


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    err = hermiticity_error(m)
    if err > tol:
        raise NotHermitian(f"matrix deviates from Hermitian by {err:.3e} (tolerance {tol:g})")


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def hermitian_eig(
    m: np.ndarray,
    *,
    tol: float = OFFDIAG_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> HermitianEigenDecomposition:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Each rotation first removes the phase of ``a[p, q]`` and then applies a
    real plane rotation, so real symmetric input stays real throughout.
    Iteration stops once the off-diagonal Frobenius norm drops below
    ``tol``; if that has not happened after ``max_sweeps`` full sweeps a
    :class:`NoConvergence` is raised.

    Returns eigenvalues in ascending order with eigenvector columns
    permuted to match. Within a degenerate eigenspace the basis is
    whatever the rotation sequence produced.
    """
    m = np.asarray(m)
    check_hermitian(m)
    dtype = np.complex128 if np.iscomplexobj(m) else np.float64
    a = np.array(m, dtype=dtype)
    # symmetrize so roundoff asymmetry below the check tolerance cannot leak in
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=dtype)

    converged = n <= 1
    for _ in range(max_sweeps):
        if converged or _offdiag_norm(a) < tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # columns: U[:, p] = c e_p - s conj(phase) e_q, U[:, q] = s e_p + c conj(phase) e_q
                cp = a[:, p].copy()
                cq = a[:, q] * np.conj(phase)
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :] * phase
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q] * np.conj(phase)
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        converged = _offdiag_norm(a) < tol

    if not converged:
        raise NoConvergence(
            f"Jacobi iteration did not reach off-diagonal norm {tol:g} in {max_sweeps} sweeps"
        )

    w = np.real(np.diag(a)).copy()
    order = np.argsort(w, kind="stable")
    return HermitianEigenDecomposition(w[order], v[:, order])


def partial_trace(rho: np.ndarray, dims: BipartiteDims, keep: Factor = "first") -> np.ndarray:
    """Reduced matrix on the ``keep`` factor."""
    rho = np.asarray(rho)
    dims.check(rho)
    t = rho.reshape(dims.d_a, dims.d_b, dims.d_a, dims.d_b)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def partial_transpose(rho: np.ndarray, dims: BipartiteDims, over: Factor = "first") -> np.ndarray:
    """Transpose the indices of one tensor factor, leaving the other alone."""
    rho = np.asarray(rho)
    dims.check(rho)
    t = rho.reshape(dims.d_a, dims.d_b, dims.d_a, dims.d_b)
    if over == "first":
        t = t.transpose(2, 1, 0, 3)
    elif over == "second":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"over must be 'first' or 'second', got {over!r}")
    return t.reshape(dims.total, dims.total).copy()


def trace_norm(m: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eig(m).eigenvalues)))

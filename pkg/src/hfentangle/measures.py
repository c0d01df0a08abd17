"""Bipartite states and entanglement measures: I-concurrence and negativity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotNormalized
from .linalg import (
    HERMITIAN_TOL,
    BipartiteDims,
    check_hermitian,
    hermitian_eig,
    partial_trace,
    partial_transpose,
    trace_norm,
)

NORM_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10

# dimension weights of the I-concurrence, fixed to one
NU_A = 1.0
NU_B = 1.0


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray
    dims: BipartiteDims

    def __post_init__(self):
        amps = _frozen(np.ravel(self.amplitudes))
        if amps.shape != (self.dims.total,):
            raise DimensionMismatch(
                f"expected {self.dims.total} amplitudes for {self.dims}, got {amps.shape[0]}"
            )
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NotNormalized(f"squared norm is {norm2!r}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amplitudes, dims: BipartiteDims) -> "PureState":
        amps = np.asarray(amplitudes, dtype=np.complex128)
        norm = np.linalg.norm(amps)
        if norm == 0.0:
            raise NotNormalized("zero vector cannot be normalized")
        return cls(amps / norm, dims)

    def projector(self) -> "DensityMatrix":
        psi = self.amplitudes
        return DensityMatrix(np.outer(psi, psi.conj()), self.dims)

    def reduced(self, keep="first") -> np.ndarray:
        psi = self.amplitudes
        return partial_trace(np.outer(psi, psi.conj()), self.dims, keep)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite bipartite state.

    Eigenvalues down to ``-PSD_TOL`` are accepted as roundoff; stored
    entries are never modified.
    """

    matrix: np.ndarray
    dims: BipartiteDims

    def __post_init__(self):
        m = _frozen(self.matrix)
        self.dims.check(m)
        check_hermitian(m, HERMITIAN_TOL)
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise NotNormalized(f"trace is {tr!r}")
        # PSD up to tolerance iff m + tol*I admits a Cholesky factor
        try:
            np.linalg.cholesky(m + PSD_TOL * np.eye(m.shape[0]))
        except np.linalg.LinAlgError:
            lo = hermitian_eig(m).eigenvalues[0]
            if lo < -PSD_TOL:
                raise ValueError(f"state has negative eigenvalue {lo:.3e}") from None
        object.__setattr__(self, "matrix", m)

    @classmethod
    def mixture(cls, states, weights=None) -> "DensityMatrix":
        """Convex combination of pure states or density matrices."""
        states = list(states)
        if weights is None:
            weights = np.full(len(states), 1.0 / len(states))
        mats = [s.projector().matrix if isinstance(s, PureState) else s.matrix for s in states]
        return cls(sum(w * m for w, m in zip(weights, mats)), states[0].dims)

    def min_eigenvalue(self) -> float:
        return float(hermitian_eig(self.matrix).eigenvalues[0])

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def concurrence_bound(dims: BipartiteDims) -> float:
    d = dims.min_dim
    return float(np.sqrt(2.0 * NU_A * NU_B * (d - 1) / d))


def concurrence_pure(psi: PureState) -> float:
    """I-concurrence sqrt(2 (1 - tr rho_A^2)) of a normalized pure state."""
    rho_a = psi.reduced("first")
    purity = float(np.real(np.vdot(rho_a, rho_a)))
    return float(np.sqrt(max(0.0, 2.0 * NU_A * NU_B * (1.0 - purity))))


def negativity(rho: DensityMatrix) -> float:
    """(||rho^T_A||_1 - 1) / 2 with the transpose taken on the nuclear factor."""
    pt = partial_transpose(rho.matrix, rho.dims, over="first")
    return (trace_norm(pt) - 1.0) / 2.0


def schmidt_coefficients(psi: PureState) -> np.ndarray:
    """Squared Schmidt coefficients (eigenvalues of rho_A), descending.

    Only the ``min(d_a, d_b)`` largest are returned; the rest vanish
    identically and their roundoff would be amplified by the square root.
    """
    lam = hermitian_eig(psi.reduced("first")).eigenvalues[::-1]
    return np.clip(lam[: psi.dims.min_dim], 0.0, None)


def schmidt_negativity_oracle(psi: PureState) -> float:
    """Negativity of a pure state from its Schmidt spectrum, ((sum sqrt(lam))^2 - 1) / 2."""
    lam = schmidt_coefficients(psi)
    return float((np.sum(np.sqrt(lam)) ** 2 - 1.0) / 2.0)

"""Ground states, their closed forms for D = 0, and the field sweep.

For D = 0 the ground level lies in the m_F = -1/2 block ({|0↓>, |⇓↑>})
when C < 0 and in the m_F = +1/2 block ({|⇑↓>, |0↑>}) when C > 0, with
energy (-1 - sqrt(9 + 4|C| + 4C^2)) / 4. At C = 0 the two levels cross
and the zero-temperature state is their equal mixture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidRange
from .linalg import hermitian_eig
from .measures import DensityMatrix, PureState, concurrence_pure, negativity
from .parallel import ordered_map
from .spin import HYPERFINE_DIMS, FieldParams, build_hamiltonian, field_operator

DEGENERACY_TOL = 1e-9

# basis indices of |⇑↓>, |0↑>, |0↓>, |⇓↑>
UP_DOWN, ZERO_UP, ZERO_DOWN, DOWN_UP = 1, 2, 3, 4

GROUND_COLUMNS = (
    "energy_numeric",
    "energy_closed",
    "concurrence_numeric",
    "concurrence_closed",
    "negativity_mixed",
)


@dataclass(frozen=True, eq=False)
class GroundStateResult:
    energy: float
    state: DensityMatrix
    degeneracy: int
    eigenvectors: np.ndarray = field(repr=False)

    @property
    def is_degenerate(self) -> bool:
        return self.degeneracy > 1

    def pure_states(self) -> list[PureState]:
        return [PureState.normalized(v, HYPERFINE_DIMS) for v in self.eigenvectors.T]


@dataclass
class SweepSeries:
    """Ordered ``(parameter, {name: value})`` records."""

    parameter_name: str
    columns: tuple[str, ...]
    records: list[tuple[float, dict[str, float]]] = field(default_factory=list)

    def append(self, parameter: float, values: dict[str, float]) -> None:
        if self.records and not parameter > self.records[-1][0]:
            raise InvalidRange(
                f"{self.parameter_name} must be strictly increasing, got {parameter} after {self.records[-1][0]}"
            )
        self.records.append((float(parameter), dict(values)))

    @property
    def parameters(self) -> np.ndarray:
        return np.array([p for p, _ in self.records])

    def column(self, name: str) -> np.ndarray:
        return np.array([vals[name] for _, vals in self.records])

    def __len__(self) -> int:
        return len(self.records)


def ground_state(params: FieldParams, degeneracy_tol: float = DEGENERACY_TOL) -> GroundStateResult:
    """Equal mixture over every eigenvector within ``degeneracy_tol`` of the lowest level."""
    if not degeneracy_tol > 0:
        raise InvalidRange(f"degeneracy_tol must be positive, got {degeneracy_tol}")
    w, v = hermitian_eig(build_hamiltonian(params))
    k = int(np.count_nonzero(w - w[0] <= degeneracy_tol))
    vecs = v[:, :k]
    rho = (vecs @ vecs.conj().T) / k
    return GroundStateResult(
        energy=float(np.mean(w[:k])),
        state=DensityMatrix(rho, HYPERFINE_DIMS),
        degeneracy=k,
        eigenvectors=vecs,
    )


def limit_pure_states(result: GroundStateResult) -> list[PureState]:
    """Pure ground states reached as C -> 0 from either side of a level crossing.

    Inside a degenerate ground space these diagonalize the field operator
    1 ⊗ S_z restricted to that space (first-order degenerate perturbation
    theory). For a nondegenerate result this is the single ground state.
    """
    if not result.is_degenerate:
        return result.pure_states()
    vecs = result.eigenvectors
    restricted = vecs.conj().T @ field_operator() @ vecs
    _, rot = hermitian_eig(restricted)
    return [PureState.normalized(vecs @ r, HYPERFINE_DIMS) for r in rot.T]


def _root(c: float) -> float:
    return math.sqrt(9.0 + 4.0 * abs(c) + 4.0 * c * c)


def ground_energy_closed_form(c: float) -> float:
    """Ground energy at D = 0: (-1 - sqrt(9 - 4C + 4C^2))/4 for C <= 0, (-1 - sqrt(9 + 4C + 4C^2))/4 for C > 0."""
    return (-1.0 - _root(c)) / 4.0


def _branch_x(c: float) -> float:
    # 1 - 2C - sqrt(...) for C <= 0; 1 + 2C + sqrt(...) for C > 0
    if c <= 0:
        return 1.0 - 2.0 * c - _root(c)
    return 1.0 + 2.0 * c + _root(c)


def concurrence_closed_form(c: float) -> float:
    """Ground-state I-concurrence at D = 0, 4 sqrt(2) |x| / (x^2 + 8).

    At C = 0 this returns the common limit 2 sqrt(2)/3 of both branches.
    """
    x = _branch_x(c)
    return 4.0 * math.sqrt(2.0) * abs(x) / (x * x + 8.0)


def ground_vector_closed_form(c: float) -> PureState:
    """Normalized ground eigenvector at D = 0.

    C <= 0: ∝ (x / 2√2)|0↓> + |⇓↑>;  C > 0: ∝ -(x / 2√2)|⇑↓> + |0↑>.
    At C = 0 this is the C -> 0- limit.
    """
    x = _branch_x(c)
    amps = np.zeros(HYPERFINE_DIMS.total, dtype=np.complex128)
    if c <= 0:
        amps[ZERO_DOWN] = x / (2.0 * math.sqrt(2.0))
        amps[DOWN_UP] = 1.0
    else:
        amps[UP_DOWN] = -x / (2.0 * math.sqrt(2.0))
        amps[ZERO_UP] = 1.0
    return PureState.normalized(amps, HYPERFINE_DIMS)


def degenerate_mixture() -> DensityMatrix:
    """Equal mixture of the two zero-field ground states φ1, φ2."""
    return DensityMatrix.mixture(zero_field_ground_states())


def zero_field_ground_states() -> tuple[PureState, PureState]:
    s1, s2 = math.sqrt(1.0 / 3.0), math.sqrt(2.0 / 3.0)
    phi1 = np.zeros(6)
    phi1[ZERO_DOWN], phi1[DOWN_UP] = -s1, s2
    phi2 = np.zeros(6)
    phi2[UP_DOWN], phi2[ZERO_UP] = -s2, s1
    return PureState.normalized(phi1, HYPERFINE_DIMS), PureState.normalized(phi2, HYPERFINE_DIMS)


def ground_point(c: float, d: float = 0.0, degeneracy_tol: float = DEGENERACY_TOL) -> dict[str, float]:
    """All ground-sweep columns at one field value."""
    params = FieldParams(c=c, d=d)
    gs = ground_state(params, degeneracy_tol)
    pure = limit_pure_states(gs)
    return {
        "energy_numeric": gs.energy,
        "energy_closed": ground_energy_closed_form(c),
        "concurrence_numeric": float(np.mean([concurrence_pure(p) for p in pure])),
        "concurrence_closed": concurrence_closed_form(c),
        "negativity_mixed": negativity(gs.state),
    }


def _ground_point_args(args):
    return ground_point(*args)


def check_grid(c_min: float, c_max: float, steps: int) -> None:
    if not (math.isfinite(c_min) and math.isfinite(c_max)) or not c_min < c_max:
        raise InvalidRange(f"need c_min < c_max, got [{c_min}, {c_max}]")
    if steps < 2:
        raise InvalidRange(f"need at least 2 steps, got {steps}")


def ground_sweep(
    c_min: float = -5.0,
    c_max: float = 5.0,
    steps: int = 1001,
    *,
    d: float = 0.0,
    degeneracy_tol: float = DEGENERACY_TOL,
    jobs: int = 1,
) -> SweepSeries:
    """Ground energy, concurrence and ground-state negativity over a uniform C grid.

    The ``*_closed`` columns always assume D = 0. ``concurrence_numeric``
    uses the pure C -> 0 limit states at a level crossing, while
    ``negativity_mixed`` is the negativity of the (possibly mixed) ground
    state itself.
    """
    check_grid(c_min, c_max, steps)
    grid = np.linspace(c_min, c_max, steps)
    rows = ordered_map(_ground_point_args, [(float(c), d, degeneracy_tol) for c in grid], jobs)
    series = SweepSeries("c", GROUND_COLUMNS)
    for c, row in zip(grid, rows):
        series.append(c, row)
    return series

"""Gibbs states, thermal negativity, and the critical temperature T_C.

T_C is where the stationary point of N(C) at C = 0 turns from a local
minimum (low T) into a local maximum (high T). It is located as the zero
of the central second difference of N at C = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidRange, NoSignChange
from .ground import SweepSeries, check_grid, ground_state
from .linalg import hermitian_eig
from .measures import DensityMatrix, negativity
from .parallel import ordered_map
from .spin import HYPERFINE_DIMS, FieldParams, build_hamiltonian

TEMPERATURE_FLOOR = 1e-8
CURVATURE_STEP = 1e-3
DEFAULT_TEMPERATURES = (0.05, 0.107, 0.2, 0.5)


@dataclass(frozen=True)
class ThermalParams:
    temperature: float
    field: FieldParams = FieldParams()

    def __post_init__(self):
        if not self.temperature > 0:
            raise InvalidRange(f"temperature must be positive, got {self.temperature}")


@dataclass(frozen=True)
class CriticalTemperatureResult:
    t_c: float
    bracket: tuple[float, float]
    curvature_low: float
    curvature_high: float
    iterations: int


def gibbs_state(params: ThermalParams) -> DensityMatrix:
    """exp(-H/T) / Z built from the spectral decomposition of H.

    Weights are shifted by the ground energy before exponentiation. Below
    ``TEMPERATURE_FLOOR`` the zero-temperature ground state is returned.
    """
    t = params.temperature
    if t < TEMPERATURE_FLOOR:
        return ground_state(params.field).state
    w, v = hermitian_eig(build_hamiltonian(params.field))
    p = np.exp(-(w - w[0]) / t)
    p /= p.sum()
    rho = (v * p) @ v.conj().T
    return DensityMatrix(rho, HYPERFINE_DIMS)


def thermal_negativity(c: float, d: float, t: float) -> float:
    return negativity(gibbs_state(ThermalParams(t, FieldParams(c=c, d=d))))


def _thermal_point(args):
    return thermal_negativity(*args)


def thermal_sweep(
    temps=DEFAULT_TEMPERATURES,
    c_min: float = -2.0,
    c_max: float = 2.0,
    steps: int = 401,
    *,
    d: float = 0.0,
    jobs: int = 1,
) -> dict[float, SweepSeries]:
    """Negativity of the Gibbs state over a C grid, one series per temperature."""
    temps = [float(t) for t in temps]
    if not temps:
        raise InvalidRange("need at least one temperature")
    bad = [t for t in temps if not t > 0]
    if bad:
        raise InvalidRange(f"temperatures must be positive, got {bad}")
    check_grid(c_min, c_max, steps)
    grid = np.linspace(c_min, c_max, steps)
    tasks = [(float(c), d, t) for t in temps for c in grid]
    values = iter(ordered_map(_thermal_point, tasks, jobs))
    out = {}
    for t in temps:
        series = SweepSeries("c", ("negativity",))
        for c in grid:
            series.append(c, {"negativity": next(values)})
        out[t] = series
    return out


def curvature_at_zero(t: float, h: float = CURVATURE_STEP, d: float = 0.0) -> float:
    """(N(h) - 2 N(0) + N(-h)) / h^2 at temperature ``t``.

    Positive means C = 0 is a local minimum of the negativity, negative a
    local maximum.
    """
    if not h > 0:
        raise InvalidRange(f"step must be positive, got {h}")
    n0 = thermal_negativity(0.0, d, t)
    return (thermal_negativity(h, d, t) - 2.0 * n0 + thermal_negativity(-h, d, t)) / (h * h)


def find_critical_temperature(
    t_low: float = 0.05,
    t_high: float = 0.5,
    tol: float = 1e-4,
    *,
    h: float = CURVATURE_STEP,
    max_iter: int = 200,
) -> CriticalTemperatureResult:
    """Bisect on the sign of :func:`curvature_at_zero` until the bracket is at most ``tol`` wide."""
    if not (0 < t_low < t_high):
        raise InvalidRange(f"need 0 < t_low < t_high, got ({t_low}, {t_high})")
    if not tol > 0:
        raise InvalidRange(f"tol must be positive, got {tol}")
    lo, hi = float(t_low), float(t_high)
    k_lo, k_hi = curvature_at_zero(lo, h), curvature_at_zero(hi, h)
    if not k_lo * k_hi < 0:
        raise NoSignChange(
            f"curvature has the same sign at T={lo} ({k_lo:.3e}) and T={hi} ({k_hi:.3e})"
        )
    it = 0
    while hi - lo > tol and it < max_iter:
        mid = 0.5 * (lo + hi)
        k_mid = curvature_at_zero(mid, h)
        if (k_mid > 0) == (k_lo > 0):
            lo, k_lo = mid, k_mid
        else:
            hi, k_hi = mid, k_mid
        it += 1
    return CriticalTemperatureResult(
        t_c=0.5 * (lo + hi),
        bracket=(lo, hi),
        curvature_low=k_lo,
        curvature_high=k_hi,
        iterations=it,
    )

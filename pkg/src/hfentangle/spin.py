"""Spin operators and the hyperfine Hamiltonian of a spin-1 nucleus and spin-1/2 electron.

Units: hbar = 1, energies in units of the hyperfine coupling J, k_B = 1.
The product basis is nuclear-major::

    |⇑↑>, |⇑↓>, |0↑>, |0↓>, |⇓↑>, |⇓↓>
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy import constants

from .linalg import BipartiteDims, kron

NUCLEAR_SPIN = 1
ELECTRON_SPIN = Fraction(1, 2)
HYPERFINE_DIMS = BipartiteDims(3, 2)

ELECTRON_G = 2.0
NUCLEAR_MOMENT = 0.822  # in nuclear magnetons
HYPERFINE_FREQUENCY_HZ = 228e6


class SpinOperators(NamedTuple):
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray


def _two_j(j) -> int:
    two_j = Fraction(j) * 2
    if two_j.denominator != 1 or two_j < 0:
        raise ValueError(f"spin must be a non-negative integer or half-integer, got {j!r}")
    return int(two_j)


def spin_operators(j) -> SpinOperators:
    """Return ``(sx, sy, sz)`` for spin ``j`` in the basis m = j, j-1, ..., -j.

    ``j`` may be an int, a float such as 0.5, or a :class:`fractions.Fraction`.
    Ladder elements use the real positive convention sqrt(j(j+1) - m(m+1)).
    """
    two_j = _two_j(j)
    jj = two_j / 2
    m = jj - np.arange(two_j + 1)
    # jplus[k-1, k] raises m[k] to m[k-1]
    jplus = np.diag(np.sqrt(jj * (jj + 1) - m[1:] * (m[1:] + 1)), k=1)
    jminus = jplus.T
    sx = 0.5 * (jplus + jminus) + 0j
    sy = -0.5j * (jplus - jminus)
    sz = np.diag(m) + 0j
    return SpinOperators(sx, sy, sz)


@dataclass(frozen=True)
class FieldParams:
    """Hyperfine coupling and reduced field strengths.

    ``c`` multiplies the electron S_z and ``d`` the nuclear I_z.
    """

    j_coupling: float = 1.0
    c: float = 0.0
    d: float = 0.0

    @classmethod
    def from_fields(cls, b1: float, b2: float, j_coupling: float = 1.0) -> "FieldParams":
        """Build parameters from electron and nuclear fields in tesla."""
        c, d = physical_to_reduced(b1, b2)
        return cls(j_coupling=j_coupling, c=c, d=d)


def build_hamiltonian(params: FieldParams) -> np.ndarray:
    """Return the 6x6 Hamiltonian J I·S + C S_z + D I_z (real-valued complex array)."""
    nuc = spin_operators(NUCLEAR_SPIN)
    ele = spin_operators(ELECTRON_SPIN)
    exchange = sum(kron(i_op, s_op) for i_op, s_op in zip(nuc, ele))
    h = (
        params.j_coupling * exchange
        + params.c * kron(np.eye(3), ele.sz)
        + params.d * kron(nuc.sz, np.eye(2))
    )
    return h


def field_operator() -> np.ndarray:
    """The operator multiplying C in the Hamiltonian, 1 ⊗ S_z."""
    return kron(np.eye(3), spin_operators(ELECTRON_SPIN).sz)


def energy_unit(frequency_hz: float = HYPERFINE_FREQUENCY_HZ) -> float:
    """Reduced energy unit in joules, h times the hyperfine frequency."""
    return constants.h * frequency_hz


def physical_to_reduced(
    b1: float, b2: float, frequency_hz: float = HYPERFINE_FREQUENCY_HZ
) -> tuple[float, float]:
    """Map electron field ``b1`` and nuclear field ``b2`` (tesla) to reduced ``(c, d)``.

    Assumes the energy unit J equals h times ``frequency_hz`` (228 MHz by
    default). That identification is a convention, not a measured fact.
    """
    mu_b = constants.physical_constants["Bohr magneton"][0]
    mu_n = constants.physical_constants["nuclear magneton"][0]
    unit = energy_unit(frequency_hz)
    c = ELECTRON_G * mu_b * b1 / unit
    d = -(NUCLEAR_MOMENT * mu_n / NUCLEAR_SPIN) * b2 / unit
    return c, d


def reduced_temperature_to_kelvin(t: float, frequency_hz: float = HYPERFINE_FREQUENCY_HZ) -> float:
    return t * energy_unit(frequency_hz) / constants.k

"""PT-symmetric qubit Hamiltonian, its eigensystem, and the non-unitary propagator.

The Hamiltonian is H = s [[i sin(alpha), 1], [1, -i sin(alpha)]], which has
real spectrum +-s cos(alpha) for |alpha| < pi/2. Because H^2 = (s cos alpha)^2 I,
the propagator exp(-i H tau) reduces to the closed form

    U(t) = cos(t) I - i sin(t) H / (s cos alpha),        t = s tau cos(alpha).

The dimensionless duration t is the only time variable exposed anywhere; tau
never appears in the API.  The off-diagonal entries of U(t) produced by this
exponentiation are both -i sin(t)/cos(alpha); this sign convention is the one
under which U U^dagger matches its closed-form coefficients (d1, d2, d3) and
the entangled-pair reduced state matches its closed form, so it is pinned
here and treated as canonical throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, ExceptionalPointError
from .matcore import I2

ALPHA_LIMIT = np.pi / 2


@dataclass(frozen=True)
class PTParams:
    """Hamiltonian scale s, non-Hermiticity angle alpha, dimensionless duration t."""

    alpha: float
    t: float
    s: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.alpha) or abs(self.alpha) >= ALPHA_LIMIT:
            raise ExceptionalPointError(
                f"alpha={self.alpha!r} outside the real-spectrum regime |alpha| < pi/2"
            )
        if not np.isfinite(self.s) or self.s <= 0:
            raise DomainError(f"scale s must be positive, got {self.s!r}")
        if not np.isfinite(self.t) or self.t < 0:
            raise DomainError(f"duration t must be >= 0, got {self.t!r}")


def with_t(p: PTParams, t: float) -> PTParams:
    """Same Hamiltonian, different duration."""
    return replace(p, t=t)


@dataclass(frozen=True)
class EigenSystem:
    """Real energies +-s cos(alpha) and the matching non-orthogonal eigenvectors."""

    e_plus: float
    e_minus: float
    v_plus: np.ndarray
    v_minus: np.ndarray


def hamiltonian(p: PTParams) -> np.ndarray:
    """s [[i sin alpha, 1], [1, -i sin alpha]]; traceless by construction."""
    sa = np.sin(p.alpha)
    return p.s * np.array([[1j * sa, 1.0], [1.0, -1j * sa]], dtype=complex)


def eigensystem(p: PTParams) -> EigenSystem:
    """Closed-form eigenpairs; the eigenvectors coalesce as |alpha| -> pi/2."""
    e = p.s * np.cos(p.alpha)
    pref = 1.0 / np.sqrt(2.0 * np.cos(p.alpha))
    v_plus = pref * np.exp(1j * p.alpha / 2) * np.array([1.0, np.exp(-1j * p.alpha)])
    v_minus = pref * np.exp(-1j * p.alpha / 2) * np.array([1.0, -np.exp(1j * p.alpha)])
    return EigenSystem(e_plus=e, e_minus=-e, v_plus=v_plus, v_minus=v_minus)


def propagator(p: PTParams) -> np.ndarray:
    """exp(-i H tau) via the H^2 = (s cos alpha)^2 I identity."""
    h_unit = hamiltonian(p) / (p.s * np.cos(p.alpha))
    return np.cos(p.t) * I2 - 1j * np.sin(p.t) * h_unit


def uu_dagger(p: PTParams) -> np.ndarray:
    """U U^dagger; the identity iff alpha = 0 or sin t = 0."""
    u = propagator(p)
    return u @ u.conj().T


def composition_check(p: PTParams, t1: float, t2: float) -> float:
    """Max-entry norm of U(t1) U(t2) - U(t1 + t2); roundoff-small by the group law."""
    u1 = propagator(with_t(p, t1))
    u2 = propagator(with_t(p, t2))
    u12 = propagator(with_t(p, t1 + t2))
    return float(np.max(np.abs(u1 @ u2 - u12)))

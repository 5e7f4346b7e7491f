"""Wigner functions of dressed-level photon states.

Two independent evaluation routes: a closed Laguerre form for the dressed
levels, and a numeric displaced-parity trace W(alpha) = (2/pi)
tr[rho D(alpha) P D(alpha)^dag] with the displacement built from the matrix
exponential of alpha a^dag - alpha* a on the truncated Fock space. Agreement
between the two is a cross-check of both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateAngle, SupportExceeded
from .hilbert import ModelParams, _destroy, _fock_parity
from .jc import DressedLabel, _omega_n, coupling_for

__all__ = [
    "WignerGrid",
    "laguerre_sequence",
    "displacement_op",
    "wigner_numeric",
    "wigner_closed_jc",
    "closed_evaluator",
    "numeric_evaluator",
    "wigner_grid",
]


@dataclass
class WignerGrid:
    """Cartesian phase-space samples; values[i, j] is W at
    re_alpha[i] + 1j * im_alpha[j]."""

    re_alpha: np.ndarray
    im_alpha: np.ndarray
    values: np.ndarray
    normalization_integral: float


def laguerre_sequence(order: int, x):
    """L_0(x) .. L_order(x) by the three-term recurrence
    (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}; stable for the moderate orders
    used here, unlike the factorial sum."""
    x = np.asarray(x, dtype=float)
    out = np.empty((order + 1,) + x.shape, dtype=float)
    out[0] = 1.0
    if order >= 1:
        out[1] = 1.0 - x
    for n in range(1, order):
        out[n + 1] = ((2.0 * n + 1.0 - x) * out[n] - n * out[n - 1]) / (n + 1.0)
    return out


# one eigendecomposition of i(a^dag - a) per Fock dimension serves every
# displacement: D(r e^{i phi}) = R_phi expm(r (a^dag - a)) R_phi^dag with
# R_phi the diagonal Fock-phase rotation
_DISP_EIG: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _displacement_eig(n_fock: int) -> tuple[np.ndarray, np.ndarray]:
    if n_fock not in _DISP_EIG:
        a = _destroy(n_fock)
        herm = 1j * (a.conj().T - a)
        _DISP_EIG[n_fock] = np.linalg.eigh(herm)
    return _DISP_EIG[n_fock]


def displacement_op(n_fock: int, alpha: complex) -> np.ndarray:
    """exp(alpha a^dag - alpha* a) on the truncated Fock space; exactly
    unitary because the truncated generator stays anti-Hermitian."""
    r = abs(alpha)
    w, u = _displacement_eig(n_fock)
    core = (u * np.exp(-1j * r * w)[None, :]) @ u.conj().T
    if alpha == 0:
        return np.eye(n_fock, dtype=complex)
    phi = np.angle(alpha)
    if phi != 0.0:
        rot = np.exp(1j * phi * np.arange(n_fock))
        core = rot[:, None] * core * np.conj(rot)[None, :]
    return core


def wigner_numeric(rho: np.ndarray, alpha: complex, *, leak_tol: float = 1e-8,
                   validate: bool = True) -> float:
    """Displaced-parity value (2/pi) tr[rho D P D^dag] for a photon density
    matrix on the truncated space.

    Raises SupportExceeded when the displaced state puts more than leak_tol
    population in the top two Fock levels, where the hard cutoff corrupts
    the parity sum.
    """
    rho = np.asarray(rho, dtype=complex)
    n_fock = rho.shape[0]
    if validate:
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError("rho must be a square matrix")
        if abs(np.trace(rho) - 1.0) > 1e-10:
            raise ValueError("rho must have unit trace")
        if float(np.abs(rho - rho.conj().T).max()) > 1e-10:
            raise ValueError("rho must be Hermitian")
        if float(np.linalg.eigvalsh(rho).min()) < -1e-10:
            raise ValueError("rho must be positive semidefinite")
    d = displacement_op(n_fock, alpha)
    displaced = d.conj().T @ rho @ d
    pops = np.real(np.diag(displaced))
    if pops[-2:].sum() > leak_tol:
        raise SupportExceeded(
            f"displaced state holds {pops[-2:].sum():.3e} population at the cutoff; "
            "increase n_max")
    signs = (-1.0) ** np.arange(n_fock)
    val = (2.0 / math.pi) * complex(np.diag(displaced) @ signs)
    if abs(val.imag) > 1e-12 * max(1.0, abs(val.real)):
        raise ValueError(f"parity trace has imaginary residue {val.imag:.3e}")
    return float(val.real)


def wigner_closed_jc(label: DressedLabel, params: ModelParams, alpha):
    """Closed Wigner function of the photon state of a dressed level.

    Ground label: (2/pi) exp(-2|alpha|^2), unit-normalized. For N >= 1 both
    branches mix the Fock states N and N-1 with weights (Omega -/+ delta)/
    (2 Omega), giving

        W(alpha) = (-1)^N exp(-2|alpha|^2) / (pi Omega)
                   * [ (Omega -/+ delta) L_N(4|alpha|^2)
                       - (Omega +/- delta) L_{N-1}(4|alpha|^2) ]

    (upper signs: plus branch). Accepts a scalar or ndarray alpha.
    """
    alpha = np.asarray(alpha, dtype=complex)
    r2 = np.abs(alpha) ** 2
    gauss = np.exp(-2.0 * r2)
    n = label.n_total
    if n == 0:
        out = (2.0 / math.pi) * gauss
        return float(out) if out.ndim == 0 else out
    g = coupling_for(label.model, params)
    omega_n = _omega_n(n, params.delta, g)
    if omega_n == 0.0:
        raise DegenerateAngle("Wigner form undefined in a degenerate sector")
    lag = laguerre_sequence(n, 4.0 * r2)
    sign = 1.0 if label.branch == "plus" else -1.0
    bracket = (omega_n - sign * params.delta) * lag[n] \
        - (omega_n + sign * params.delta) * lag[n - 1]
    out = ((-1.0) ** n) * gauss / (math.pi * omega_n) * bracket
    return float(out) if out.ndim == 0 else out


def closed_evaluator(label: DressedLabel, params: ModelParams) -> Callable:
    """Vectorized closed-form evaluator alpha -> W(alpha)."""
    return lambda alpha: wigner_closed_jc(label, params, alpha)


def numeric_evaluator(rho: np.ndarray, leak_tol: float = 1e-8) -> Callable:
    """Pointwise displaced-parity evaluator; density matrix validated once."""
    rho = np.asarray(rho, dtype=complex)
    wigner_numeric(rho, 0.0, leak_tol=leak_tol, validate=True)
    return lambda alpha: wigner_numeric(rho, alpha, leak_tol=leak_tol, validate=False)


def wigner_grid(evaluator: Callable, window: float, points: int) -> WignerGrid:
    """Sample W on the square [-window, window]^2 and attach the trapezoid
    normalization integral (1 for a window that holds the support)."""
    if points < 16:
        raise ValueError("points must be >= 16")
    if not (np.isfinite(window) and window > 0):
        raise ValueError("window must be positive and finite")
    axis = np.linspace(-window, window, points)
    try:
        re, im = np.meshgrid(axis, axis, indexing="ij")
        values = np.asarray(evaluator(re + 1j * im), dtype=float)
        if values.shape != (points, points):
            raise TypeError
    except (TypeError, ValueError):
        values = np.empty((points, points), dtype=float)
        for i, x in enumerate(axis):
            for j, y in enumerate(axis):
                values[i, j] = evaluator(complex(x, y))
    integral = float(np.trapezoid(np.trapezoid(values, axis, axis=1), axis))
    return WignerGrid(axis.copy(), axis.copy(), values, integral)

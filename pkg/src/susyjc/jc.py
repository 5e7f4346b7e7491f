"""Closed-form dressed spectrum of the Jaynes-Cummings model and its
counter-rotating twin.

Level labels are (branch, N) where N is the conserved total excitation number
of the sector and branch is 'plus' or 'minus'; (minus, 0) is the unique
singlet ground label and (plus, 0) does not exist. For the 'jc' model the
coupling is ``lam``, for 'ajc' it is ``mu``; the two spectra coincide at
matched coupling because the models are related by an exact pi/2 spin
rotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateAngle,
    InvalidLabel,
    InvalidN,
    TruncationTooSmall,
)
from .hilbert import HilbertConfig, ModelParams

__all__ = [
    "DressedLabel",
    "DressedState",
    "CrossingRecord",
    "coupling_for",
    "rabi_frequency",
    "mixing_angle",
    "dressed_energy",
    "dressed_state",
    "lowest_closed_levels",
    "crossing_pair",
    "ground_state_critical",
    "reduced_density",
    "von_neumann_entropy",
]

BRANCHES = ("plus", "minus")
LABEL_MODELS = ("jc", "ajc")


@dataclass(frozen=True)
class DressedLabel:
    """(branch, N) label of a dressed level of the jc or ajc model."""

    branch: str
    n_total: int
    model: str = "jc"

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise InvalidLabel(f"branch must be one of {BRANCHES}, got {self.branch!r}")
        if self.model not in LABEL_MODELS:
            raise InvalidLabel(f"model must be one of {LABEL_MODELS}, got {self.model!r}")
        if int(self.n_total) != self.n_total or self.n_total < 0:
            raise InvalidLabel("n_total must be a nonnegative integer")
        if self.n_total == 0 and self.branch == "plus":
            raise InvalidLabel("(plus, 0) is not a level; the N=0 sector is a singlet")


@dataclass
class DressedState:
    """Closed-form eigenvector with its label, on a given truncation."""

    label: DressedLabel
    amplitudes: np.ndarray


@dataclass(frozen=True)
class CrossingRecord:
    """Two labels that become degenerate at the recorded coupling."""

    left: DressedLabel | None
    right: DressedLabel | None
    coupling: float


def coupling_for(model: str, params: ModelParams) -> float:
    """Coupling amplitude the closed forms use for the given model."""
    if model == "jc":
        return params.lam
    if model == "ajc":
        return params.mu
    raise InvalidLabel(f"closed forms cover 'jc' and 'ajc', got {model!r}")


def _omega_n(n_total: int, delta: float, g: float) -> float:
    # generalized Rabi splitting of the N-th sector
    return math.hypot(delta, 2.0 * g * math.sqrt(n_total))


def rabi_frequency(n_total: int, params: ModelParams, model: str = "jc") -> float:
    """Sector splitting Omega(N) = sqrt(delta^2 + 4 g^2 N), N >= 1."""
    if int(n_total) != n_total or n_total < 1:
        raise InvalidN("rabi_frequency needs a positive integer N")
    return _omega_n(n_total, params.delta, coupling_for(model, params))


def mixing_angle(n_total: int, params: ModelParams, model: str = "jc") -> float:
    """Sector mixing angle beta(N) = atan2(2 g sqrt(N), delta) folded to
    [-pi/2, pi/2]; equals pi/2 on resonance."""
    if int(n_total) != n_total or n_total < 1:
        raise InvalidN("mixing_angle needs a positive integer N")
    g = coupling_for(model, params)
    if params.delta == 0.0 and g == 0.0:
        raise DegenerateAngle("mixing angle undefined at delta = 0 with zero coupling")
    beta = math.atan2(2.0 * g * math.sqrt(n_total), params.delta)
    if beta > math.pi / 2.0:
        beta -= math.pi
    return beta


def dressed_energy(label: DressedLabel, params: ModelParams) -> float:
    """Closed-form eigenvalue of the labeled level.

    E(minus, 0) = -omega0/2 and, for N >= 1,
    E(+/-, N) = omega (N - 1/2) +/- Omega(N)/2.
    """
    if label.n_total == 0:
        return -0.5 * params.omega0
    omega_n = _omega_n(label.n_total, params.delta, coupling_for(label.model, params))
    sign = 1.0 if label.branch == "plus" else -1.0
    return params.omega * (label.n_total - 0.5) + 0.5 * sign * omega_n


def dressed_state(label: DressedLabel, params: ModelParams,
                  cfg: HilbertConfig) -> DressedState:
    """Closed-form eigenvector on the composite space.

    The global phase makes the amplitude of lowest composite index real
    positive. jc sectors live on {|g,N>, |e,N-1>}, ajc sectors on
    {|g,N-1>, |e,N>}; the two are images of each other under the exact pi/2
    spin rotation.
    """
    n = label.n_total
    if cfg.n_max < n:
        raise TruncationTooSmall(f"n_max={cfg.n_max} cannot hold a level with N={n}")
    amp = np.zeros(cfg.dim, dtype=complex)
    if n == 0:
        if label.model == "jc":
            amp[cfg.index("g", 0)] = 1.0
        else:
            amp[cfg.index("e", 0)] = 1.0
        return DressedState(label, amp)

    delta = params.delta
    omega_n = _omega_n(n, delta, coupling_for(label.model, params))
    if omega_n == 0.0:
        raise DegenerateAngle("dressed state undefined in a degenerate sector "
                              "(delta = 0 with zero coupling)")
    c_hi = math.sqrt((omega_n + delta) / (2.0 * omega_n))  # weight of |g,N>-like slot
    c_lo = math.sqrt((omega_n - delta) / (2.0 * omega_n))
    phase = np.exp(1j * params.theta)
    if label.model == "jc":
        if label.branch == "plus":
            amp[cfg.index("g", n)] = c_lo
            amp[cfg.index("e", n - 1)] = phase * c_hi
        else:
            amp[cfg.index("g", n)] = c_hi
            amp[cfg.index("e", n - 1)] = -phase * c_lo
    else:
        if label.branch == "plus":
            amp[cfg.index("g", n - 1)] = c_hi
            amp[cfg.index("e", n)] = -np.conj(phase) * c_lo
        else:
            amp[cfg.index("g", n - 1)] = c_lo
            amp[cfg.index("e", n)] = np.conj(phase) * c_hi
    return DressedState(label, amp)


def lowest_closed_levels(params: ModelParams, count: int,
                         model: str = "jc") -> list[tuple[float, DressedLabel]]:
    """Lowest `count` closed-form levels, sorted ascending by energy."""
    if count < 1:
        raise InvalidN("count must be >= 1")
    g = coupling_for(model, params)
    if params.omega > 0:
        n_cap = int(2.0 * (g / params.omega) ** 2) + 2 * count + 8
    else:
        n_cap = 2 * count + 8
    out = [(dressed_energy(DressedLabel("minus", 0, model), params),
            DressedLabel("minus", 0, model))]
    for n in range(1, n_cap + 1):
        for branch in BRANCHES:
            lab = DressedLabel(branch, n, model)
            out.append((dressed_energy(lab, params), lab))
    out.sort(key=lambda t: t[0])
    return out[:count]


def crossing_pair(m: int, n: int, branch: str,
                  params: ModelParams) -> CrossingRecord | None:
    """Coupling where the (branch, M) level meets the (minus, N) level,
    N > M >= 0, from the closed radical

        lam^2 = omega [ (M+N) omega -/+ sqrt(delta^2 + 4 M N omega^2) ]

    with the minus sign for branch 'plus'. Returns None when no positive root
    exists or when the root fails re-verification against dressed_energy
    (the closed root treats the N=0 sector with |delta|, which only matches
    the true singlet energy for delta >= 0).
    """
    if int(m) != m or int(n) != n or m < 0 or n <= m:
        raise InvalidN("crossing_pair needs integers N > M >= 0")
    if branch not in BRANCHES:
        raise InvalidLabel(f"branch must be one of {BRANCHES}")
    if m == 0 and branch == "plus":
        return None  # no (plus, 0) level exists
    omega = params.omega
    radicand = params.delta ** 2 + 4.0 * m * n * omega ** 2
    root = math.sqrt(radicand)
    bracket = (m + n) * omega - root if branch == "plus" else (m + n) * omega + root
    if bracket <= 0.0 or omega <= 0.0:
        return None
    lam_c = math.sqrt(omega * bracket)
    if lam_c <= 0.0:
        return None
    at_crossing = replace(params, lam=lam_c)
    left = DressedLabel(branch, m, "jc") if m > 0 else DressedLabel("minus", 0, "jc")
    right = DressedLabel("minus", n, "jc")
    e_left = dressed_energy(left, at_crossing)
    e_right = dressed_energy(right, at_crossing)
    scale = max(1.0, abs(e_left), abs(e_right))
    if abs(e_left - e_right) > 1e-9 * scale:
        return None
    return CrossingRecord(left, right, lam_c)


def ground_state_critical(n: int, params: ModelParams) -> float:
    """Coupling where the ground state hops from sector N-1 to sector N,
    i.e. where Omega(N) - Omega(N-1) = 2 omega (with Omega(0) = |delta|).

    Closed solution lam_N^2 = omega [ (2N-1) omega + sqrt(delta^2
    + 4 N (N-1) omega^2) ]; the first one for omega0 > omega is
    sqrt(omega omega0).
    """
    if int(n) != n or n < 1:
        raise InvalidN("ground_state_critical needs a positive integer N")
    omega = params.omega
    radicand = params.delta ** 2 + 4.0 * n * (n - 1) * omega ** 2
    lam_n = math.sqrt(omega * ((2 * n - 1) * omega + math.sqrt(radicand)))
    # Re-verify against the defining condition rather than trusting the
    # radical alone (it was solved by hand).
    at = ModelParams(omega=params.omega, omega0=params.omega0, lam=lam_n)
    upper = rabi_frequency(n, at)
    lower = abs(at.delta) if n == 1 else rabi_frequency(n - 1, at)
    scale = max(abs(upper), abs(lower), 2.0 * abs(omega), 1.0)
    if abs(upper - lower - 2.0 * omega) > 1e-9 * scale:
        raise ArithmeticError(
            f"closed-form critical coupling violates its defining gap "
            f"condition at N={n}: {upper - lower} != {2.0 * omega}")
    return lam_n


def reduced_density(label: DressedLabel, params: ModelParams, subsystem: str,
                    cfg: HilbertConfig | None = None) -> np.ndarray:
    """Reduced density matrix of a dressed level.

    subsystem 'fermion' gives the 2x2 spin state (basis g, e), 'boson' the
    Fock-diagonal photon state; cfg defaults to the smallest truncation that
    holds the level. Eigenvalues of the N >= 1 fermion state are
    (Omega -/+ delta)/(2 Omega) independent of the branch ordering.
    """
    if subsystem not in ("fermion", "boson"):
        raise ValueError(f"subsystem must be 'fermion' or 'boson', got {subsystem!r}")
    if cfg is None:
        cfg = HilbertConfig(max(label.n_total, 1))
    state = dressed_state(label, params, cfg).amplitudes
    mat = state.reshape(2, cfg.n_fock)
    if subsystem == "fermion":
        return mat @ mat.conj().T
    return mat.T @ mat.conj()


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -tr(rho ln rho) in nats."""
    evals = np.linalg.eigvalsh(rho)
    evals = evals[evals > 1e-18]
    return float(-(evals * np.log(evals)).sum())

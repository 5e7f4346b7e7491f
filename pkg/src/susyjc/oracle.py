"""Dense diagonalization oracle with truncation certification and a
level-crossing finder.

The oracle never uses the closed forms: it diagonalizes the truncated matrix,
certifies convergence by doubling the Fock cutoff, and locates crossings by
scanning and bisecting, so closed-form results can be validated against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import NoConvergence, NotHermitian
from .jc import CrossingRecord, DressedLabel

__all__ = [
    "EigenSolution",
    "diagonalize",
    "certify_truncation",
    "find_crossings",
]


@dataclass
class EigenSolution:
    """Eigen-decomposition, ascending; converged_levels counts the leading
    eigenvalues certified stable under truncation doubling (0 = uncertified)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    converged_levels: int
    n_max_used: int


def diagonalize(h: np.ndarray, hermiticity_tol: float = 1e-12) -> EigenSolution:
    """Eigh with a Hermiticity gate and deterministic ordering.

    Columns are phase-fixed so the largest-magnitude amplitude is real
    positive; bitwise-equal eigenvalues are ordered by the basis index of
    that amplitude.
    """
    dev = float(np.abs(h - h.conj().T).max())
    scale = max(1.0, float(np.abs(h).max()))
    if dev > hermiticity_tol * scale:
        raise NotHermitian(f"max |H - H^dag| = {dev:.3e} exceeds tolerance")
    evals, evecs = np.linalg.eigh(h)
    anchors = np.abs(evecs).argmax(axis=0)
    order = np.lexsort((anchors, evals))
    evals = evals[order]
    evecs = evecs[:, order]
    anchors = anchors[order]
    cols = np.arange(evecs.shape[1])
    pivots = evecs[anchors, cols]
    phases = np.where(np.abs(pivots) > 0, pivots / np.abs(np.where(pivots == 0, 1, pivots)), 1.0)
    evecs = evecs * np.conj(phases)[None, :]
    return EigenSolution(evals, evecs, 0, h.shape[0] // 2 - 1)


def certify_truncation(builder: Callable[[int], np.ndarray], k_levels: int,
                       tol: float = 1e-10, start_n_max: int = 32,
                       cap_n_max: int = 2048) -> EigenSolution:
    """Double n_max until the lowest k_levels eigenvalues move < tol.

    builder(n_max) must return the same physical Hamiltonian at any cutoff.
    Raises NoConvergence once the cap is passed.
    """
    if k_levels < 1:
        raise ValueError("k_levels must be >= 1")
    prev = None
    n_max = start_n_max
    while n_max <= cap_n_max:
        sol = diagonalize(builder(n_max))
        if prev is not None:
            k = min(k_levels, prev.eigenvalues.size, sol.eigenvalues.size)
            diffs = np.abs(sol.eigenvalues[:k] - prev.eigenvalues[:k])
            if k == k_levels and diffs.max() < tol:
                m = min(prev.eigenvalues.size, sol.eigenvalues.size)
                all_diffs = np.abs(sol.eigenvalues[:m] - prev.eigenvalues[:m])
                converged = int(np.argmax(all_diffs >= tol)) if (all_diffs >= tol).any() else m
                return EigenSolution(sol.eigenvalues, sol.eigenvectors,
                                     max(converged, k_levels), sol.n_max_used)
        prev = sol
        n_max *= 2
    raise NoConvergence(f"lowest {k_levels} eigenvalues not stable below n_max={cap_n_max}")


def _ground(builder, x) -> tuple[float, float, np.ndarray]:
    sol = diagonalize(builder(x))
    return sol.eigenvalues[0], sol.eigenvalues[1], sol.eigenvectors[:, 0]


def _sector_of(vec: np.ndarray, sector_op: np.ndarray) -> int:
    return int(round(float(np.real(vec.conj() @ sector_op @ vec))))


def _label_of(vec: np.ndarray, energy: float, sol: EigenSolution,
              sector_op: np.ndarray, model: str) -> DressedLabel:
    n_sector = _sector_of(vec, sector_op)
    if n_sector <= 0:
        return DressedLabel("minus", max(n_sector, 0), model)
    partner_energy = None
    for k in range(sol.eigenvalues.size):
        if abs(sol.eigenvalues[k] - energy) < 1e-12 and np.abs(
                np.vdot(sol.eigenvectors[:, k], vec)) > 0.99:
            continue
        if _sector_of(sol.eigenvectors[:, k], sector_op) == n_sector:
            partner_energy = sol.eigenvalues[k]
            break
    branch = "minus"
    if partner_energy is not None and energy > partner_energy:
        branch = "plus"
    return DressedLabel(branch, n_sector, model)


def find_crossings(builder: Callable[[float], np.ndarray],
                   coupling_range: tuple[float, float], *,
                   mode: str = "ground",
                   pair: tuple[int, int] | None = None,
                   grid_points: int = 400,
                   xtol: float = 1e-9,
                   min_gap: float = 1e-8,
                   sector_op: np.ndarray | None = None,
                   label_model: str = "jc") -> list[CrossingRecord]:
    """Locate couplings where eigenvalues cross inside coupling_range.

    mode 'ground' tracks the ground eigenvector by overlap between grid
    points and bisects every interval where its identity changes. mode
    'pair' follows the sorted gap E[j] - E[i] for pair=(i, j), refines each
    grid-local minimum, and keeps it only if the refined gap is below
    min_gap (an avoided crossing stays out).

    When sector_op (a conserved excitation-number matrix) is given, the
    colliding levels are labeled through their sector expectation; otherwise
    labels are None.
    """
    lo, hi = float(coupling_range[0]), float(coupling_range[1])
    if not (np.isfinite(lo) and np.isfinite(hi) and hi > lo):
        raise ValueError("coupling_range must be a finite increasing pair")
    if grid_points < 3:
        raise ValueError("grid_points must be >= 3")
    grid = np.linspace(lo, hi, grid_points)
    records: list[CrossingRecord] = []

    if mode == "ground":
        _, _, prev_vec = _ground(builder, grid[0])
        for k in range(1, grid.size):
            _, _, vec = _ground(builder, grid[k])
            if np.abs(np.vdot(prev_vec, vec)) ** 2 < 0.5:
                a, b = grid[k - 1], grid[k]
                va, vb = prev_vec, vec
                while b - a > xtol:
                    mid = 0.5 * (a + b)
                    _, _, vm = _ground(builder, mid)
                    if np.abs(np.vdot(vm, va)) ** 2 >= np.abs(np.vdot(vm, vb)) ** 2:
                        a, va = mid, vm
                    else:
                        b, vb = mid, vm
                left = right = None
                if sector_op is not None:
                    left = DressedLabel("minus", _sector_of(va, sector_op), label_model)
                    right = DressedLabel("minus", _sector_of(vb, sector_op), label_model)
                records.append(CrossingRecord(left, right, 0.5 * (a + b)))
            prev_vec = vec
        return records

    if mode == "pair":
        if pair is None:
            raise ValueError("mode='pair' requires pair=(i, j)")
        i, j = pair

        def gap(x: float) -> float:
            w = np.linalg.eigvalsh(builder(x))
            return float(w[j] - w[i])

        gaps = np.array([gap(x) for x in grid])
        for k in range(1, grid.size - 1):
            if gaps[k] <= gaps[k - 1] and gaps[k] <= gaps[k + 1]:
                res = minimize_scalar(gap, bounds=(grid[k - 1], grid[k + 1]),
                                      method="bounded",
                                      options={"xatol": xtol})
                if res.fun >= min_gap:
                    continue
                x_star = float(res.x)
                if any(abs(x_star - r.coupling) < 10 * max(xtol, 1e-12) for r in records):
                    continue
                left = right = None
                if sector_op is not None:
                    sol = diagonalize(builder(grid[k - 1]))
                    left = _label_of(sol.eigenvectors[:, i], sol.eigenvalues[i],
                                     sol, sector_op, label_model)
                    right = _label_of(sol.eigenvectors[:, j], sol.eigenvalues[j],
                                      sol, sector_op, label_model)
                records.append(CrossingRecord(left, right, x_star))
        return records

    raise ValueError(f"unknown mode {mode!r}")

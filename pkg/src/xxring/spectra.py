"""Dense Hermitian eigensolving and ground-manifold extraction.

``eigh`` wraps the LAPACK Hermitian solver with a symmetry check and a
deterministic phase convention (largest component of each eigenvector made
real positive).  ``ground_manifold`` scans every magnetization sector of the
ring through its momentum blocks, applies the field offset, and collects all
states within a relative tolerance of the global minimum.  Exact ground-level
degeneracies here are symmetry-protected, so the default tolerance of 1e-9
times the spectral range separates them cleanly from solver noise.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .basis import SectorBasis, enumerate_sector, rotate, translation_orbits
from .hamiltonian import (Coupling, FieldSetting, MomentumBlock,
                          build_momentum_block, hop_table, sector_energy_offset)

HERMITICITY_RTOL = 1e-12
DEGENERACY_RTOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues ascending, eigenvectors in matching columns."""

    values: np.ndarray
    vectors: np.ndarray
    source: str = ""


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive."""
    out = vectors.copy()
    for col in range(out.shape[1]):
        lead = out[np.argmax(np.abs(out[:, col])), col]
        if lead != 0:
            out[:, col] *= np.conj(lead) / abs(lead)
    return out


def eigh(matrix: np.ndarray, source: str = "") -> Spectrum:
    """Full decomposition of a Hermitian matrix with fixed phases."""
    matrix = np.asarray(matrix)
    scale = max(np.abs(matrix).max() if matrix.size else 0.0, 1.0)
    if matrix.size and np.abs(matrix - matrix.conj().T).max() > HERMITICITY_RTOL * scale:
        raise ValueError("matrix is not Hermitian within 1e-12 relative tolerance")
    values, vectors = np.linalg.eigh(matrix)
    return Spectrum(values=values, vectors=_fix_phases(vectors), source=source)


@dataclass(frozen=True)
class SectorState:
    """Amplitude vector over one sector basis, with its momentum tag."""

    basis: SectorBasis
    amplitudes: np.ndarray
    momentum: int | None = None

    @property
    def k(self) -> int:
        return self.basis.k


def lift_block_vector(block: MomentumBlock, v: np.ndarray) -> np.ndarray:
    """Expand a momentum-block vector into sector amplitudes.

    The orbit representative ``a`` with period p contributes amplitude
    v_a * exp(-2*pi*i*m*t/n) / sqrt(p) on each member rotate(a, t).
    """
    v = np.asarray(v)
    if v.shape != (block.dim,):
        raise ValueError(f"vector has shape {v.shape}, block dimension is {block.dim}")
    basis = block.basis
    n = basis.n
    phase = np.exp(-2j * np.pi * block.m * np.arange(n) / n)
    out = np.zeros(basis.dim, dtype=complex)
    for rep, period, amp in zip(block.reps, block.periods, v):
        w = amp / np.sqrt(period)
        for t in range(period):
            out[basis.index_of(rotate(rep, t, n))] = w * phase[t]
    return out


@dataclass(frozen=True)
class GroundManifold:
    """All states at the minimum energy, one amplitude vector per (k, m)."""

    energy: float
    states: tuple[SectorState, ...]
    tolerance: float

    @property
    def degeneracy(self) -> int:
        return len(self.states)

    def sectors(self) -> tuple[int, ...]:
        return tuple(sorted({s.k for s in self.states}))


def _sector_levels(n, k, coupling, field):
    """Diagonalize every momentum block of one sector.

    Returns (eigenvalues with field offset, candidates), one candidate
    (energy, m, block, eigenvector column) per level.
    """
    basis = enumerate_sector(n, k)
    orbits = translation_orbits(basis)
    hops = hop_table(basis, orbits)
    offset = sector_energy_offset(k, n, field)
    values = []
    candidates = []
    for m in range(n):
        block = build_momentum_block(basis, orbits, m, coupling, hops=hops)
        if block.dim == 0:
            continue
        spectrum = eigh(block.matrix, source=f"k={k} m={m}")
        shifted = spectrum.values + offset
        values.append(shifted)
        for col, energy in enumerate(shifted):
            candidates.append((energy, m, block, spectrum.vectors[:, col]))
    return np.concatenate(values), candidates


def ground_manifold(n: int, coupling: Coupling, field: FieldSetting = FieldSetting(),
                    tol: float = DEGENERACY_RTOL, threads: int = 1) -> GroundManifold:
    """Ground energy and every degenerate ground state of the n-site ring.

    Scans all sectors k = 0..n through their momentum blocks and clusters
    eigenvalues within ``tol`` times the spectral range of the minimum.
    States are lifted to sector amplitudes and ordered by (k, m).
    """
    ks = range(n + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_sector = list(pool.map(
                lambda k: _sector_levels(n, k, coupling, field), ks))
    else:
        per_sector = [_sector_levels(n, k, coupling, field) for k in ks]

    all_values = np.concatenate([values for values, _ in per_sector])
    e0 = float(all_values.min())
    window = tol * max(float(all_values.max()) - e0, np.finfo(float).tiny)

    states = []
    for k, (_, candidates) in zip(ks, per_sector):
        for energy, m, block, column in candidates:
            if energy - e0 <= window:
                states.append((k, m, block, column))
    states.sort(key=lambda s: (s[0], s[1]))
    return GroundManifold(
        energy=e0,
        states=tuple(SectorState(basis=block.basis, amplitudes=lift_block_vector(block, col),
                                 momentum=m)
                     for _, m, block, col in states),
        tolerance=tol,
    )

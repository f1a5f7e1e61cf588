"""Random-matrix model of multi-mode scattering.

Each detected mode k carries a 2x2 Jones matrix of scattering amplitudes
whose real and imaginary parts are independent N(0, 1) variables. The
measured Mueller matrix is the sum of the single-mode Mueller matrices,
renormalized to M[0, 0] = 1 (small detector aperture, W = identity).

Realization r at mode count N draws from
``PCG64(SeedSequence(seed, spawn_key=(N, r)))``, so the ensemble is fixed by
the seed alone and does not depend on how realizations are scheduled.
"""
import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import contains_array
from .mueller import (
    depolarization_index_from_spectrum,
    eigenspectrum,
    h_from_mueller,
    polarization_entropy,
    raw_mueller_from_jones,
)


class MediumKind(enum.Enum):
    GENERIC = "generic"
    CONSERVING = "conserving"


@dataclass(frozen=True)
class EnsembleConfig:
    n_modes_max: int = 30
    realizations: int = 2000
    kind: MediumKind = MediumKind.GENERIC
    seed: int = 0

    def __post_init__(self):
        if self.n_modes_max < 1:
            raise ValueError("n_modes_max must be at least 1")
        if self.realizations < 1:
            raise ValueError("realizations must be at least 1")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "kind", MediumKind(self.kind))


@dataclass(frozen=True)
class SweepRecord:
    kind: MediumKind
    n: int
    mean_d: float
    mean_e: float
    std_d: float
    std_e: float
    realizations: int


def draw_modes(kind, rng, n):
    """Jones matrices of ``n`` independent modes, shape (n, 2, 2).

    Generic media use 8 normals per mode (all four entries); polarization
    conserving media use 4 (the diagonal) and leave the off-diagonal zero.
    """
    kind = MediumKind(kind)
    if kind is MediumKind.GENERIC:
        x = rng.standard_normal((n, 2, 2, 2))
        return x[..., 0] + 1j * x[..., 1]
    x = rng.standard_normal((n, 2, 2))
    t = np.zeros((n, 2, 2), dtype=complex)
    t[:, 0, 0] = x[:, 0, 0] + 1j * x[:, 0, 1]
    t[:, 1, 1] = x[:, 1, 0] + 1j * x[:, 1, 1]
    return t


def draw_mode(kind, rng):
    return draw_modes(kind, rng, 1)[0]


def accumulate_mueller(modes):
    """Normalized Mueller matrix of a set of detected modes.

    ``modes`` has shape (..., N, 2, 2); the mode axis is summed.
    """
    modes = np.asarray(modes, dtype=complex)
    if modes.ndim < 3 or modes.shape[-2:] != (2, 2) or modes.shape[-3] == 0:
        raise ValueError("need at least one 2x2 mode")
    raw = raw_mueller_from_jones(modes).sum(axis=-3)
    m00 = raw[..., 0, 0]
    if np.any(m00 <= 0):
        raise ValueError("all modes are zero")
    return raw / m00[..., None, None]


def realization_rng(seed, n, r):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(n, r))))


def _draw_block(cfg, n, rs):
    return np.stack([draw_modes(cfg.kind, realization_rng(cfg.seed, n, r), n) for r in rs])


def ensemble(cfg, n, workers=1):
    """Per-realization (d, e) arrays for ``n`` detected modes."""
    rs = range(cfg.realizations)
    if workers > 1:
        chunks = [rs[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _draw_block(cfg, n, c), chunks))
        modes = np.empty((cfg.realizations, n, 2, 2), dtype=complex)
        for c, part in zip(chunks, parts):
            if len(c):
                modes[list(c)] = part
    else:
        modes = _draw_block(cfg, n, rs)
    m = accumulate_mueller(modes)
    lam = eigenspectrum(h_from_mueller(m))
    return depolarization_index_from_spectrum(lam), polarization_entropy(lam)


def sweep(cfg, workers=1, check=True):
    """Ensemble statistics for N = 1 .. cfg.n_modes_max.

    With ``check`` set, every realization is verified to fall inside the
    analytic (D, E) domain and a violation raises AssertionError.
    """
    records = []
    ddof = 1 if cfg.realizations > 1 else 0
    for n in range(1, cfg.n_modes_max + 1):
        d, e = ensemble(cfg, n, workers=workers)
        if check and not np.all(contains_array(d, e)):
            raise AssertionError(f"realization outside the physical domain at N={n}")
        records.append(
            SweepRecord(
                kind=cfg.kind,
                n=n,
                mean_d=float(d.mean()),
                mean_e=float(e.mean()),
                std_d=float(d.std(ddof=ddof)),
                std_e=float(e.std(ddof=ddof)),
                realizations=cfg.realizations,
            )
        )
    return records

"""Monte Carlo cloud of admissible (D, E) pairs.

Points are drawn uniformly on the unit 3-sphere in R^4 by normalizing four
standard normals; the squared coordinates form a valid spectrum of H.

Reproducibility: points are grouped in fixed blocks of ``BLOCK`` indices and
block ``b`` draws from ``PCG64(SeedSequence(seed, spawn_key=(b,)))``. The
stream a point sees therefore depends only on (seed, index), never on how
many workers share the work.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .mueller import depolarization_index_from_spectrum, polarization_entropy

BLOCK = 4096
_TINY = 1e-300


@dataclass(frozen=True)
class SamplerConfig:
    count: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class Cloud:
    """Sampled points; row i of ``spectra`` yields (d[i], e[i])."""

    d: np.ndarray
    e: np.ndarray
    spectra: np.ndarray

    def __len__(self):
        return len(self.d)


def block_rng(seed, block):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def _spectra_from_normals(g):
    norm2 = np.sum(g * g, axis=-1, keepdims=True)
    lam = g * g / norm2
    lam = -np.sort(-lam, axis=-1)
    return lam / lam.sum(axis=-1, keepdims=True)


def sample_spectrum(rng):
    """One uniformly sampled spectrum, sorted descending."""
    while True:
        g = rng.standard_normal(4)
        if np.dot(g, g) >= _TINY:
            return _spectra_from_normals(g)


def sample_spectra(rng, count):
    g = rng.standard_normal((count, 4))
    bad = np.sum(g * g, axis=1) < _TINY
    while np.any(bad):
        g[bad] = rng.standard_normal((int(bad.sum()), 4))
        bad = np.sum(g * g, axis=1) < _TINY
    return _spectra_from_normals(g)


def _block(seed, block, count):
    start = block * BLOCK
    n = min(BLOCK, count - start)
    lam = sample_spectra(block_rng(seed, block), BLOCK)[:n]
    return lam


def generate_cloud(cfg, workers=1):
    """Sample ``cfg.count`` points of the (D, E) domain.

    Output is identical for any ``workers`` value.
    """
    nblocks = -(-cfg.count // BLOCK)
    if workers > 1 and nblocks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _block(cfg.seed, b, cfg.count), range(nblocks)))
    else:
        parts = [_block(cfg.seed, b, cfg.count) for b in range(nblocks)]
    lam = np.concatenate(parts)
    return Cloud(
        d=depolarization_index_from_spectrum(lam),
        e=polarization_entropy(lam),
        spectra=lam,
    )

"""Pauli basis, Stokes vectors and coherency matrices of a light beam.

Stokes ordering is s1 = 2 Re(X* Y), s2 = 2 Im(X* Y), s3 = |X|^2 - |Y|^2,
so that rho = (sigma0 + s . sigma) / 2 holds with the standard Pauli
matrices below.
"""
import numpy as np

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA.setflags(write=False)

SIGMA0, SIGMA1, SIGMA2, SIGMA3 = SIGMA

_TOL = 1e-12


def as_stokes(s):
    """Validate a Stokes 4-vector and normalize it to s0 = 1."""
    s = np.asarray(s, dtype=float)
    if s.shape != (4,):
        raise ValueError(f"Stokes vector must have 4 entries, got shape {s.shape}")
    if not np.all(np.isfinite(s)):
        raise ValueError("Stokes vector has non-finite entries")
    if s[0] <= 0:
        raise ValueError(f"s0 must be positive, got {s[0]}")
    s = s / s[0]
    if np.dot(s[1:], s[1:]) > 1 + 1e-9:
        raise ValueError("Stokes vector is over-polarized (|s| > s0)")
    return s


def as_coherency(rho, tol=_TOL):
    """Validate a 2x2 coherency matrix (Hermitian, unit trace, PSD)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"coherency matrix must be 2x2, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("coherency matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise ValueError("coherency matrix must have unit trace")
    # closed form for a 2x2 Hermitian: (tr -/+ sqrt(tr^2 - 4 det)) / 2
    det = (rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real
    if det < -tol:
        raise ValueError("coherency matrix has a negative eigenvalue")
    return rho


def coherency_from_stokes(s):
    s = as_stokes(s)
    return np.einsum("k,kij->ij", s, SIGMA) / 2


def stokes_from_coherency(rho):
    """Stokes parameters s_mu = Tr(rho sigma_mu)."""
    rho = as_coherency(rho)
    return np.einsum("ij,kji->k", rho, SIGMA).real


def degree_of_polarization(s):
    """Degree of polarization |(s1, s2, s3)| / s0 in [0, 1]."""
    s = np.asarray(s, dtype=float)
    if s.shape != (4,) or s[0] <= 0:
        raise ValueError("need a Stokes 4-vector with s0 > 0")
    p = np.linalg.norm(s[1:]) / s[0]
    if p > 1 + 1e-9:
        raise ValueError(f"degree of polarization {p} exceeds 1")
    return float(min(p, 1.0))


def xlogy_base(p, base):
    """Elementwise -p log_base(p) with 0 log 0 = 0."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = -p[pos] * np.log(p[pos]) / np.log(base)
    return out


def field_entropy(p):
    """Base-2 von Neumann entropy of a beam with degree of polarization p.

    The coherency matrix of such a beam has eigenvalues (1 +/- p) / 2, so the
    entropy is the binary entropy of (1 + p) / 2. Ranges from 1 (unpolarized)
    down to 0 (fully polarized).
    """
    if not (-_TOL <= p <= 1 + _TOL):
        raise ValueError(f"degree of polarization must lie in [0, 1], got {p}")
    p = min(max(p, 0.0), 1.0)
    nu = np.array([(1 + p) / 2, (1 - p) / 2])
    return float(xlogy_base(nu, 2).sum())


def apply_mueller(m, s):
    """Output Stokes vector s'_mu = sum_nu M_mu,nu s_nu."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"Mueller matrix must be 4x4, got shape {m.shape}")
    s = np.asarray(s, dtype=float)
    if s.shape != (4,):
        raise ValueError("Stokes vector must have 4 entries")
    return m @ s

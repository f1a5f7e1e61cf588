"""Mueller-matrix characterization through the Hermitian H matrix.

H = 1/4 sum_{mu,nu} M[mu, nu] (sigma_mu kron conj(sigma_nu)) is positive
semidefinite exactly when M describes a physically realizable medium. Its
spectrum gives the depolarization index and the (base-4) polarization
entropy of the medium.

All functions accept either a single 4x4 matrix or a stack (..., 4, 4).
"""
import numpy as np

from .jacobi import jacobi_eigvalsh
from .polarization import SIGMA, xlogy_base

# KRON[mu, nu] = sigma_mu kron conj(sigma_nu), row index 2i+k, column 2j+l
KRON = np.einsum("aij,bkl->abikjl", SIGMA, SIGMA.conj()).reshape(4, 4, 4, 4)
KRON.setflags(write=False)

NEG_EIG_TOL = 1e-9
SUM_TOL = 1e-10


def as_mueller(m):
    """Validate Mueller matrices and normalize them so that M[0, 0] = 1."""
    m = np.asarray(m, dtype=float)
    if m.shape[-2:] != (4, 4):
        raise ValueError(f"Mueller matrix must be 4x4, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("Mueller matrix has non-finite entries")
    m00 = m[..., 0, 0]
    if np.any(m00 <= 0):
        raise ValueError("M[0, 0] must be positive")
    m = m / m00[..., None, None]
    m[..., 0, 0] = 1.0
    return m


def as_spectrum(lam):
    """Check a spectrum of H: four values in [0, 1] summing to 1."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] != 4:
        raise ValueError(f"spectrum must have 4 eigenvalues, got shape {lam.shape}")
    if np.any(np.abs(lam.sum(axis=-1) - 1) > SUM_TOL):
        raise ValueError("eigenvalues must sum to 1")
    if np.any(lam < -NEG_EIG_TOL) or np.any(lam > 1 + NEG_EIG_TOL):
        raise ValueError("eigenvalues must lie in [0, 1]")
    return lam


def h_from_mueller(m):
    m = as_mueller(m)
    return np.einsum("...ab,abij->...ij", m, KRON) / 4


def mueller_from_h(h):
    """Invert h_from_mueller using Tr(kron_ab kron_cd) = 4 delta_ac delta_bd."""
    h = np.asarray(h, dtype=complex)
    if h.shape[-2:] != (4, 4):
        raise ValueError(f"H must be 4x4, got shape {h.shape}")
    m = np.einsum("...ij,abji->...ab", h, KRON)
    if np.max(np.abs(m.imag), initial=0.0) > 1e-9:
        raise ValueError("H does not map to a real Mueller matrix (is it Hermitian?)")
    return m.real


def raw_eigenvalues(h):
    """Unclipped eigenvalues of H in descending order (Jacobi)."""
    return jacobi_eigvalsh(h)


def eigenspectrum(h, tol=NEG_EIG_TOL):
    """Eigenvalues of H, descending, clipped at 0 and renormalized to sum 1.

    Raises ValueError when an eigenvalue is below -tol; such an H does not
    belong to a physical medium.
    """
    lam = raw_eigenvalues(h)
    if np.any(lam < -tol):
        raise ValueError(f"H has a negative eigenvalue {lam.min():.3g} (unphysical)")
    lam = np.clip(lam, 0.0, None)
    return lam / lam.sum(axis=-1, keepdims=True)


def _clamped_sqrt(d2):
    d2 = np.asarray(d2, dtype=float)
    if np.any(d2 < -1e-12) or np.any(d2 > 1 + 1e-9):
        raise ValueError("squared depolarization index outside [0, 1]")
    d = np.sqrt(np.clip(d2, 0.0, 1.0))
    return float(d) if d.ndim == 0 else d


def depolarization_index_from_m(m):
    """Depolarization index sqrt((Tr(M^T M) - 1) / 3) of a normalized M."""
    m = as_mueller(m)
    return _clamped_sqrt((np.sum(m * m, axis=(-2, -1)) - 1) / 3)


def depolarization_index_from_spectrum(lam):
    lam = as_spectrum(lam)
    return _clamped_sqrt((4 * np.sum(lam * lam, axis=-1) - 1) / 3)


def polarization_entropy(lam):
    """Base-4 entropy of the spectrum of H, in [0, 1]."""
    lam = as_spectrum(lam)
    e = xlogy_base(np.clip(lam, 0.0, None), 4).sum(axis=-1)
    e = np.clip(e, 0.0, 1.0)
    return float(e) if e.ndim == 0 else e


def is_physical(m, tol=NEG_EIG_TOL):
    """Realizability test: is the smallest eigenvalue of H at least -tol?

    Returns ``(physical, min_eigenvalue)``.
    """
    lam = raw_eigenvalues(h_from_mueller(m))
    lo = lam[..., -1]
    ok = lo >= -tol
    if np.ndim(lo) == 0:
        return bool(ok), float(lo)
    return ok, lo


def raw_mueller_from_jones(j):
    """Unnormalized m[mu, nu] = 1/2 Tr(sigma_mu J sigma_nu J^dagger)."""
    j = np.asarray(j, dtype=complex)
    return 0.5 * np.einsum(
        "aij,...jk,bkl,...il->...ab", SIGMA, j, SIGMA, j.conj(), optimize=True
    ).real


def mueller_from_jones(j):
    """Non-depolarizing Mueller matrix of a single Jones matrix."""
    j = np.asarray(j, dtype=complex)
    if j.shape[-2:] != (2, 2):
        raise ValueError(f"Jones matrix must be 2x2, got shape {j.shape}")
    raw = raw_mueller_from_jones(j)
    if np.any(raw[..., 0, 0] <= 0):
        raise ValueError("Jones matrix is zero")
    return raw / raw[..., 0, 0, None, None]


def characterize(m):
    """Depolarization index and polarization entropy of a physical M."""
    lam = eigenspectrum(h_from_mueller(m))
    return depolarization_index_from_spectrum(lam), polarization_entropy(lam)

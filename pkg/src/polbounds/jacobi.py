"""Cyclic Jacobi eigenvalue iteration for small complex Hermitian matrices.

Works on a single matrix or on a stack of shape (..., n, n); every matrix in
the stack is rotated in lock-step, which keeps ensemble calculations
vectorized. Each rotation first removes the phase of the pivot element with
a diagonal unitary and then applies an ordinary real Givens rotation.
"""
import numpy as np

OFF_TOL = 1e-13
MAX_SWEEPS = 50
# pivots below this are left alone; dividing subnormals by their modulus overflows
_NEGLIGIBLE = 1e-150


def off_norm(a):
    """Frobenius norm of the off-diagonal part, per matrix in the stack."""
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[..., mask]) ** 2, axis=-1))


def _rotate(a, p, q):
    apq = a[..., p, q]
    r = np.abs(apq)
    active = r > _NEGLIGIBLE
    phase = np.where(active, apq / np.where(active, r, 1.0), 1.0)

    # a_pq -> r real: scale column q by conj(phase) and row q by phase
    a[..., :, q] *= np.conj(phase)[..., None]
    a[..., q, :] *= phase[..., None]

    app = a[..., p, p].real
    aqq = a[..., q, q].real
    safe_r = np.where(active, r, 1.0)
    theta = (aqq - app) / (2.0 * safe_r)
    t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(theta == 0, 1.0, t)
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    cp = a[..., :, p].copy()
    cq = a[..., :, q].copy()
    a[..., :, p] = c[..., None] * cp - s[..., None] * cq
    a[..., :, q] = s[..., None] * cp + c[..., None] * cq
    rp = a[..., p, :].copy()
    rq = a[..., q, :].copy()
    a[..., p, :] = c[..., None] * rp - s[..., None] * rq
    a[..., q, :] = s[..., None] * rp + c[..., None] * rq
    a[..., p, q] = 0.0
    a[..., q, p] = 0.0


def jacobi_eigvalsh(h, tol=OFF_TOL, max_sweeps=MAX_SWEEPS):
    """Eigenvalues of Hermitian matrices, sorted in descending order.

    Parameters
    ----------
    h : array_like, shape (..., n, n)
        Hermitian matrix or stack of them. Only the input copy is modified.
    tol : float
        Sweeps stop once every matrix has off-diagonal Frobenius norm < tol.

    Returns
    -------
    ndarray, shape (..., n)
    """
    a = np.array(h, dtype=complex, copy=True)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    # symmetrize to kill rounding asymmetry in the input
    a = (a + np.conj(np.swapaxes(a, -1, -2))) / 2
    n = a.shape[-1]
    for _ in range(max_sweeps):
        if np.all(off_norm(a) < tol):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, p, q)
    else:
        if not np.all(off_norm(a) < tol):
            raise RuntimeError("Jacobi iteration did not converge")
    w = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    return -np.sort(-w, axis=-1)

"""Independent eigenvalue oracle: real embedding, Householder, Sturm bisection.

Shares no numerical code with the Jacobi solver. The complex Hermitian
``A = X + iY`` is embedded as the real symmetric ``[[X, -Y], [Y, X]]`` whose
spectrum is that of ``A`` with every eigenvalue doubled.
"""

from __future__ import annotations

import numpy as np

from eigdiag.errors import OrderTooLarge
from eigdiag.linalg import HermitianMatrix, Spectrum

MAX_ORDER = 64
BISECTION_WIDTH = 1e-13
_MAX_BISECTIONS = 200


def real_embedding(A: HermitianMatrix) -> np.ndarray:
    x, y = A.data.real, A.data.imag
    return np.block([[x, -y], [y, x]])


def tridiagonalize(S: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a real symmetric matrix to (diagonal, subdiagonal)."""
    S = np.array(S, dtype=float)
    m = S.shape[0]
    for k in range(m - 2):
        x = S[k + 1 :, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        alpha = -norm_x if x[0] >= 0 else norm_x
        v = x.copy()
        v[0] -= alpha
        norm_v = np.linalg.norm(v)
        if norm_v == 0.0:
            continue
        v /= norm_v
        # S <- H S H with H = I - 2 v v^T acting on rows/cols k+1..m-1
        sub = S[k + 1 :, k:]
        sub -= 2.0 * np.outer(v, v @ sub)
        sub = S[k:, k + 1 :]
        sub -= 2.0 * np.outer(sub @ v, v)
    return S.diagonal().copy(), S.diagonal(-1).copy()


def sturm_count(d: np.ndarray, e: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Number of eigenvalues strictly below each shift in ``x`` (vectorized)."""
    e2 = e * e
    pivmin = np.finfo(float).tiny * max(1.0, float(e2.max()) if e2.size else 1.0)
    q = d[0] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(np.int64)
    for i in range(1, d.size):
        q = d[i] - x - e2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def bisect_eigenvalues(d: np.ndarray, e: np.ndarray, targets: np.ndarray, width: float = BISECTION_WIDTH):
    """Bisect for the 0-based ascending eigenvalue indices ``targets``."""
    m = d.size
    radius = np.zeros(m)
    if m > 1:
        radius[:-1] += np.abs(e)
        radius[1:] += np.abs(e)
    lo_bound = float((d - radius).min())
    hi_bound = float((d + radius).max())
    pad = 1e-12 * max(1.0, abs(lo_bound), abs(hi_bound)) + 1e-300
    lo = np.full(targets.size, lo_bound - pad)
    hi = np.full(targets.size, hi_bound + pad)
    for _ in range(_MAX_BISECTIONS):
        active = hi - lo > width
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        stuck = (mid <= lo) | (mid >= hi)
        active &= ~stuck
        if not active.any():
            break
        below = sturm_count(d, e, mid)
        go_right = below <= targets
        lo = np.where(active & go_right, mid, lo)
        hi = np.where(active & ~go_right, mid, hi)
    return 0.5 * (lo + hi), float((hi - lo).max()) if targets.size else 0.0


def oracle_eigenvalues(A: HermitianMatrix) -> Spectrum:
    """Ascending eigenvalues of ``A`` via the real embedding and Sturm bisection."""
    if A.n > MAX_ORDER:
        raise OrderTooLarge(f"oracle supports n <= {MAX_ORDER}, got {A.n}")
    d, e = tridiagonalize(real_embedding(A))
    # every eigenvalue of A appears twice in the embedding
    targets = np.arange(0, 2 * A.n, 2)
    values, width = bisect_eigenvalues(d, e, targets)
    return Spectrum(np.sort(values), width)

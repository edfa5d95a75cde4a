"""Cyclic complex Jacobi kernel, compiled with numba.

The kernel works in place on a private copy of the matrix and accumulates the
unitary eigenvector matrix so callers can measure residuals.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    total = 0.0
    for j in range(n):
        for k in range(n):
            if j != k:
                z = a[j, k]
                total += z.real * z.real + z.imag * z.imag
    return np.sqrt(total)


@numba.njit(cache=True)
def jacobi_hermitian(a, tol, max_sweeps):
    """Diagonalize the Hermitian matrix ``a`` (overwritten) by cyclic Jacobi sweeps.

    Returns ``(diag, v, sweeps, converged)`` where ``a`` ~= v diag(diag) v^H.
    ``tol`` is the absolute off-diagonal Frobenius threshold.
    """
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    fnorm = 0.0
    for j in range(n):
        for k in range(n):
            z = a[j, k]
            fnorm += z.real * z.real + z.imag * z.imag
    fnorm = np.sqrt(fnorm)
    negligible = 1e-18 * fnorm

    sweeps = 0
    converged = False
    while True:
        if _offdiag_norm(a) <= tol:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = np.abs(apq)
                if g <= negligible:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                w = apq / g
                wc = np.conj(w)
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * g)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- A J with J = diag(1, conj(w)) R on the (p, q) plane
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * wc * akq
                    a[k, q] = s * akp + c * wc * akq
                # A <- J^H A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * w * aqk
                    a[q, k] = s * apk + c * w * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * g
                a[q, q] = aqq + t * g
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * wc * vkq
                    v[k, q] = s * vkp + c * wc * vkq

    diag = np.empty(n)
    for j in range(n):
        diag[j] = a[j, j].real
    return diag, v, sweeps, converged

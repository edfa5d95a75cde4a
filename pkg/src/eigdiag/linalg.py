"""Dense Hermitian matrices and the primary (Jacobi) eigensolver.

All public indices are 1-based; ``lambda_1`` is the smallest eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from eigdiag._jacobi import jacobi_hermitian
from eigdiag.errors import (
    ConvergenceFailure,
    DuplicateIndex,
    IndexOutOfRange,
    NonFiniteEntry,
    NotHermitian,
    NotSquare,
)

HERMITIAN_RTOL = 1e-12
JACOBI_RTOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Immutable dense complex Hermitian matrix.

    Build instances with :func:`make_hermitian`; the constructor trusts its
    input and only freezes the array.
    """

    data: np.ndarray

    def __post_init__(self):
        if not self.data.flags.writeable:
            return
        object.__setattr__(self, "data", _frozen(np.array(self.data, dtype=np.complex128)))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        """Diagonal entries in storage order (real)."""
        return self.data.diagonal().real.copy()

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.data))

    @property
    def maxabs(self) -> float:
        return float(np.abs(self.data).max()) if self.n else 0.0

    def tolerance(self) -> float:
        """Comparison tolerance tau = 1e-9 * max(1, ||A||_F)."""
        return 1e-9 * max(1.0, self.frobenius_norm)

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.n, self.data.tobytes()))

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues plus an accuracy figure.

    ``max_residual`` is max ||Av - lambda v||_2 for the Jacobi solver and the
    final bisection interval width for the oracle.
    """

    values: np.ndarray
    max_residual: float = 0.0
    sweeps: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float).copy()))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]

    def lam(self, j: int) -> float:
        """1-based accessor: ``lam(1)`` is the smallest eigenvalue."""
        return float(self.values[j - 1])


def make_hermitian(raw) -> HermitianMatrix:
    """Validate ``raw`` and return the exactly Hermitian matrix (raw + raw^H)/2."""
    arr = np.asarray(raw, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotSquare(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntry("matrix contains NaN or infinite entries")
    scale = max(1.0, float(np.abs(arr).max()))
    asym = float(np.abs(arr - arr.conj().T).max())
    if asym > HERMITIAN_RTOL * scale:
        raise NotHermitian(f"asymmetry {asym:.3e} exceeds {HERMITIAN_RTOL * scale:.3e}")
    herm = (arr + arr.conj().T) / 2
    herm.imag[np.diag_indices_from(herm)] = 0.0
    return HermitianMatrix(herm)


def zeros(n: int) -> HermitianMatrix:
    return HermitianMatrix(np.zeros((n, n), dtype=np.complex128))


def diag(values) -> HermitianMatrix:
    return make_hermitian(np.diag(np.asarray(values, dtype=float)))


def _eigh(A: HermitianMatrix):
    a = np.array(A.data, dtype=np.complex128)
    fnorm = A.frobenius_norm
    w, v, sweeps, converged = jacobi_hermitian(a, JACOBI_RTOL * fnorm, JACOBI_MAX_SWEEPS)
    if not converged:
        raise ConvergenceFailure(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (n={A.n})")
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], sweeps


def eigenvalues(A: HermitianMatrix) -> Spectrum:
    """Ascending eigenvalues of ``A`` by cyclic complex Jacobi rotations."""
    w, v, sweeps = _eigh(A)
    resid = A.data @ v - v * w
    max_resid = float(np.linalg.norm(resid, axis=0).max()) if A.n else 0.0
    return Spectrum(w, max_resid, sweeps)


def eigenvalues_fast(A: HermitianMatrix) -> np.ndarray:
    """Ascending eigenvalues without residual bookkeeping (hot loops)."""
    return _eigh(A)[0]


def principal_submatrix(A: HermitianMatrix, indices) -> HermitianMatrix:
    """Principal submatrix on the 1-based ``indices`` (rows and columns)."""
    idx = [int(i) for i in indices]
    if not idx:
        raise IndexOutOfRange("empty index list")
    if len(set(idx)) != len(idx):
        raise DuplicateIndex(f"duplicate indices in {idx}")
    bad = [i for i in idx if not 1 <= i <= A.n]
    if bad:
        raise IndexOutOfRange(f"indices {bad} outside 1..{A.n}")
    sel = np.array(idx) - 1
    return HermitianMatrix(A.data[np.ix_(sel, sel)].copy())


def leading_block(A: HermitianMatrix, r: int) -> HermitianMatrix:
    """Top-left ``r x r`` principal submatrix A_r."""
    if not 1 <= r <= A.n:
        raise IndexOutOfRange(f"block order {r} outside 1..{A.n}")
    return HermitianMatrix(A.data[:r, :r].copy())


def split_diag_offdiag(A: HermitianMatrix) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Return ``(D, M)``: diagonal part and zero-diagonal part, D + M == A exactly."""
    d = np.diag(A.data.diagonal()).astype(np.complex128)
    m = A.data.copy()
    m[np.diag_indices_from(m)] = 0.0
    return HermitianMatrix(d), HermitianMatrix(m)


def negate(A: HermitianMatrix) -> HermitianMatrix:
    return HermitianMatrix(-A.data)


def add(A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix:
    return HermitianMatrix(A.data + B.data)


def permute(A: HermitianMatrix, perm) -> HermitianMatrix:
    """Return P A P^T where row j of the result is row ``perm[j]`` (1-based) of A."""
    sel = np.asarray(perm, dtype=int) - 1
    return HermitianMatrix(A.data[np.ix_(sel, sel)].copy())

"""Matrix classes P and I, their generators, and the signless Laplacian.

Random generators draw from ``numpy.random.PCG64`` seeded with the caller's
64-bit seed. Search code derives per-trial streams as ``seed ^ trial``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from eigdiag.errors import DuplicateEdge, IndexOutOfRange, InvalidRange, OrderTooSmall, SelfLoop
from eigdiag.linalg import HermitianMatrix, leading_block, make_hermitian, permute

CLASS_RTOL = 1e-12
SEED_MASK = (1 << 64) - 1


class ClassTag(str, enum.Enum):
    CLASS_P = "P"
    CLASS_I = "I"
    DET_M3_NONNEG = "DetM3Nonneg"
    GENERAL = "General"


def class_tolerance(A: HermitianMatrix) -> float:
    return CLASS_RTOL * max(1.0, A.maxabs)


def _offdiag(A: HermitianMatrix) -> np.ndarray:
    mask = ~np.eye(A.n, dtype=bool)
    return A.data[mask]


def is_class_p(A: HermitianMatrix) -> bool:
    off = _offdiag(A)
    tol = class_tolerance(A)
    return bool(np.all(np.abs(off.imag) <= tol) and np.all(off.real >= -tol))


def is_class_i(A: HermitianMatrix) -> bool:
    return bool(np.all(np.abs(_offdiag(A).real) <= class_tolerance(A)))


def det_m3_tolerance(A: HermitianMatrix) -> float:
    return CLASS_RTOL * max(1.0, A.maxabs) ** 3


def classify(A: HermitianMatrix) -> frozenset[ClassTag]:
    """All class tags whose predicate holds for ``A``; ``GENERAL`` is always present.

    ``DET_M3_NONNEG`` needs a 3x3 block, so it is never reported for n < 3.
    """
    tags = {ClassTag.GENERAL}
    if is_class_p(A):
        tags.add(ClassTag.CLASS_P)
    if is_class_i(A):
        tags.add(ClassTag.CLASS_I)
    if A.n >= 3 and det_m3(A) >= -det_m3_tolerance(A):
        tags.add(ClassTag.DET_M3_NONNEG)
    return frozenset(tags)


def normalize_diagonal_order(A: HermitianMatrix) -> tuple[HermitianMatrix, tuple[int, ...]]:
    """Conjugate by the permutation that sorts the diagonal ascending.

    Ties keep their original order. The permutation is 1-based: entry ``j`` is
    the original index now in position ``j``.
    """
    order = np.argsort(A.diagonal, kind="stable")
    perm = tuple(int(i) + 1 for i in order)
    if perm == tuple(range(1, A.n + 1)):
        return A, perm
    return permute(A, perm), perm


def det_m3(A: HermitianMatrix) -> float:
    """det of the zero-diagonal part of the sorted matrix's top-left 3x3 block.

    Uses the closed form 2 Re(a12 a23 conj(a13)).
    """
    if A.n < 3:
        raise OrderTooSmall(f"det_m3 needs n >= 3, got {A.n}")
    S, _ = normalize_diagonal_order(A)
    a = S.data
    return float(2.0 * (a[0, 1] * a[1, 2] * np.conj(a[0, 2])).real)


def det_m3_direct(A: HermitianMatrix) -> float:
    """Same quantity via a general 3x3 determinant (cross-check)."""
    S, _ = normalize_diagonal_order(A)
    m = leading_block(S, 3).data.copy()
    m[np.diag_indices(3)] = 0.0
    return float(np.linalg.det(m).real)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))


def _check_params(n, diag_range, offdiag_max):
    if n < 1:
        raise InvalidRange(f"order must be >= 1, got {n}")
    lo, hi = diag_range
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise InvalidRange(f"bad diagonal range {diag_range}")
    if not math.isfinite(offdiag_max) or offdiag_max < 0:
        raise InvalidRange(f"offdiag_max must be finite and >= 0, got {offdiag_max}")
    return float(lo), float(hi)


def _draw_diagonal(rng, n, lo, hi, quantized):
    if quantized:
        return np.where(rng.integers(0, 2, size=n) == 1, hi, lo)
    return rng.uniform(lo, hi, size=n)


def _assemble(diagonal: np.ndarray, upper: np.ndarray) -> HermitianMatrix:
    n = diagonal.size
    a = np.zeros((n, n), dtype=np.complex128)
    iu = np.triu_indices(n, 1)
    a[iu] = upper
    a = a + a.conj().T
    a[np.diag_indices(n)] = diagonal
    return make_hermitian(a)


def random_class_p(
    n: int,
    seed: int,
    diag_range: tuple[float, float] = (-1.0, 1.0),
    offdiag_max: float = 1.0,
    quantized: bool = False,
) -> HermitianMatrix:
    """Random class-P matrix: off-diagonals uniform on [0, offdiag_max].

    With ``quantized`` the off-diagonals are drawn from {0, offdiag_max} and
    the diagonal from the two endpoints of ``diag_range``.
    """
    lo, hi = _check_params(n, diag_range, offdiag_max)
    rng = _rng(seed)
    d = _draw_diagonal(rng, n, lo, hi, quantized)
    m = n * (n - 1) // 2
    if quantized:
        upper = rng.integers(0, 2, size=m) * offdiag_max
    else:
        upper = rng.uniform(0.0, offdiag_max, size=m)
    return _assemble(d, upper.astype(np.complex128))


def random_class_i(
    n: int,
    seed: int,
    diag_range: tuple[float, float] = (-1.0, 1.0),
    offdiag_max: float = 1.0,
    quantized: bool = False,
) -> HermitianMatrix:
    """Random class-I matrix: off-diagonals i*u with u uniform on [-offdiag_max, offdiag_max]."""
    lo, hi = _check_params(n, diag_range, offdiag_max)
    rng = _rng(seed)
    d = _draw_diagonal(rng, n, lo, hi, quantized)
    m = n * (n - 1) // 2
    if quantized:
        u = rng.integers(-1, 2, size=m) * offdiag_max
    else:
        u = rng.uniform(-offdiag_max, offdiag_max, size=m)
    return _assemble(d, 1j * u)


def random_hermitian(n: int, seed: int, scale: float = 1.0) -> HermitianMatrix:
    """Unstructured Hermitian matrix with Gaussian real and imaginary parts."""
    if n < 1:
        raise InvalidRange(f"order must be >= 1, got {n}")
    rng = _rng(seed)
    x = rng.normal(scale=scale, size=(n, n)) + 1j * rng.normal(scale=scale, size=(n, n))
    return make_hermitian((x + x.conj().T) / 2)


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive weights; vertices are 1-based."""

    n_vertices: int
    edges: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if self.n_vertices < 1:
            raise InvalidRange(f"graph needs at least one vertex, got {self.n_vertices}")
        seen = set()
        clean = []
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 1..{self.n_vertices}")
            if not (math.isfinite(w) and w > 0):
                raise InvalidRange(f"edge ({u}, {v}) has non-positive weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {key}")
            seen.add(key)
            clean.append((u, v, w))
        object.__setattr__(self, "edges", tuple(clean))


def signless_laplacian(G: WeightedGraph) -> HermitianMatrix:
    """Q = D + W with D the weighted degrees and W the weight matrix."""
    w = np.zeros((G.n_vertices, G.n_vertices))
    for u, v, weight in G.edges:
        w[u - 1, v - 1] = weight
        w[v - 1, u - 1] = weight
    q = w + np.diag(w.sum(axis=1))
    return make_hermitian(q)

"""Checkers for the eigenvalue/diagonal inequalities and proof-chain certificates.

Every checker returns an :class:`InequalityReport` whose comparisons carry the
signed slack ``rhs - lhs``; an inequality holds when the worst slack is at
least ``-tau`` with ``tau = 1e-9 * max(1, ||A||_F)``. Out-of-class matrices
raise :class:`ClassNotApplicable` unless ``force=True``, in which case the
violating report is returned as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from eigdiag.classes import (
    ClassTag,
    class_tolerance,
    classify,
    det_m3,
    det_m3_tolerance,
    is_class_i,
    normalize_diagonal_order,
)
from eigdiag.errors import (
    ClassNotApplicable,
    HypothesisViolated,
    IndexOutOfRange,
    NotZeroDiagonal,
    OrderMismatch,
    OrderTooSmall,
)
from eigdiag.linalg import (
    HermitianMatrix,
    add,
    eigenvalues_fast,
    leading_block,
    split_diag_offdiag,
)


def ceil_half(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class Comparison:
    label: str
    index: tuple[int, ...]
    lhs: float
    rhs: float

    def __post_init__(self):
        object.__setattr__(self, "lhs", float(self.lhs))
        object.__setattr__(self, "rhs", float(self.rhs))

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class InequalityReport:
    name: str
    holds: bool
    worst_slack: float
    witness: tuple
    tolerance: float
    comparisons: tuple[Comparison, ...] = ()
    parts: tuple[str, ...] = ()
    unsupported: tuple[str, ...] = ()

    def slacks(self, label: str) -> list[float]:
        return [c.slack for c in self.comparisons if c.label == label]

    def part_holds(self, label: str) -> bool:
        return all(s >= -self.tolerance for s in self.slacks(label))

    def worst(self, label: str | None = None) -> Comparison:
        comps = [c for c in self.comparisons if label is None or c.label == label]
        return min(comps, key=lambda c: c.slack)


def _report(name, comps, tau, parts=(), unsupported=()) -> InequalityReport:
    worst = min(comps, key=lambda c: c.slack)
    return InequalityReport(
        name=name,
        holds=bool(worst.slack >= -tau),
        worst_slack=float(worst.slack),
        witness=(worst.label, *worst.index),
        tolerance=tau,
        comparisons=tuple(comps),
        parts=tuple(parts),
        unsupported=tuple(unsupported),
    )


def _lam(A: HermitianMatrix, spectrum=None) -> np.ndarray:
    if spectrum is None:
        return eigenvalues_fast(A)
    return np.asarray(getattr(spectrum, "values", spectrum), dtype=float)


def check_basic_bounds(A: HermitianMatrix, spectrum=None) -> InequalityReport:
    lam = _lam(A, spectrum)
    a = np.sort(A.diagonal)
    n = A.n
    comps = [
        Comparison("lower", (1,), lam[0], a[0]),
        Comparison("upper", (n,), a[-1], lam[-1]),
    ]
    return _report("basic", comps, A.tolerance(), parts=("lower", "upper"))


def check_schur_majorization(A: HermitianMatrix, spectrum=None) -> InequalityReport:
    lam = _lam(A, spectrum)
    a = np.sort(A.diagonal)
    slam, sa = np.cumsum(lam), np.cumsum(a)
    comps = [Comparison("partial", (k + 1,), slam[k], sa[k]) for k in range(A.n)]
    # equality at k = n, encoded as a one-sided slack -|difference|
    gap = abs(slam[-1] - sa[-1])
    comps.append(Comparison("trace", (A.n,), gap, 0.0))
    return _report("schur", comps, A.tolerance(), parts=("partial", "trace"))


def check_weyl(A: HermitianMatrix, B: HermitianMatrix) -> InequalityReport:
    """lambda_j(A + B) <= lambda_j(A) + lambda_n(B) for every j."""
    if A.n != B.n:
        raise OrderMismatch(f"orders differ: {A.n} vs {B.n}")
    lam_sum = eigenvalues_fast(add(A, B))
    lam_a = eigenvalues_fast(A)
    top_b = eigenvalues_fast(B)[-1]
    comps = [Comparison("weyl", (j + 1,), lam_sum[j], lam_a[j] + top_b) for j in range(A.n)]
    tau = 1e-9 * max(1.0, A.frobenius_norm + B.frobenius_norm)
    return _report("weyl", comps, tau, parts=("weyl",))


def check_interlacing(A: HermitianMatrix, r: int, spectrum=None) -> InequalityReport:
    """lambda_j(A) <= lambda_j(A_r) for j <= r, A_r the top-left r x r block."""
    if not 1 <= r <= A.n:
        raise IndexOutOfRange(f"r = {r} outside 1..{A.n}")
    lam = _lam(A, spectrum)
    lam_r = eigenvalues_fast(leading_block(A, r))
    comps = [Comparison("interlace", (j + 1, r), lam[j], lam_r[j]) for j in range(r)]
    return _report("interlace", comps, A.tolerance(), parts=("interlace",))


def check_theorem1(A: HermitianMatrix, force: bool = False, spectrum=None) -> InequalityReport:
    """lambda_2 <= a_3 for P, I or DetM3Nonneg; also lambda_{n-1} >= a_{n-2} for I.

    With ``force`` both parts are evaluated whatever the class, and parts
    checked outside their hypothesis are listed in ``unsupported``.
    """
    n = A.n
    if n < 3:
        raise OrderTooSmall(f"theorem 1 needs n >= 3, got {n}")
    tags = classify(A)
    eq3_ok = bool(tags & {ClassTag.CLASS_P, ClassTag.CLASS_I, ClassTag.DET_M3_NONNEG})
    eq4_ok = ClassTag.CLASS_I in tags
    if not eq3_ok and not force:
        raise ClassNotApplicable("theorem 1 needs class P, class I or det M3 >= 0")
    lam = _lam(A, spectrum)
    a = np.sort(A.diagonal)
    comps = [Comparison("eq3", (2, 3), lam[1], a[2])]
    parts, unsupported = ["eq3"], [] if eq3_ok else ["eq3"]
    if eq4_ok or force:
        comps.append(Comparison("eq4", (n - 1, n - 2), a[n - 3], lam[n - 2]))
        parts.append("eq4")
        if not eq4_ok:
            unsupported.append("eq4")
    return _report("thm1", comps, A.tolerance(), parts, unsupported)


def theorem2_comparisons(lam: np.ndarray, a: np.ndarray) -> list[Comparison]:
    n = lam.size
    comps = []
    for k in range(1, ceil_half(n) + 1):
        comps.append(Comparison("lower", (k,), lam[k - 1], a[2 * k - 2]))
    for k in range(1, ceil_half(n) + 1):
        comps.append(Comparison("upper", (k,), a[n - 2 * k + 1], lam[n - k]))
    return comps


def check_theorem2(A: HermitianMatrix, force: bool = False, spectrum=None) -> InequalityReport:
    """lambda_k <= a_{2k-1} ("lower") and lambda_{n-k+1} >= a_{n-2k+2} ("upper")."""
    supported = is_class_i(A)
    if not supported and not force:
        raise ClassNotApplicable("theorem 2 needs purely imaginary off-diagonal entries")
    lam = _lam(A, spectrum)
    a = np.sort(A.diagonal)
    unsupported = () if supported else ("lower", "upper")
    return _report("thm2", theorem2_comparisons(lam, a), A.tolerance(), ("lower", "upper"), unsupported)


@dataclass(frozen=True)
class Certificate:
    """Numeric replay of lambda_k(A) <= lambda_k(A_r) <= lambda_k(M_r) + a_r <= a_r, r = 2k - 1."""

    k: int
    lambda_k_A: float
    lambda_k_sub: float
    lambda_k_M: float
    a_target: float
    chain_valid: bool
    tolerance: float
    trace_M: float = 0.0
    det_M: float | None = field(default=None)

    @property
    def link_slacks(self) -> tuple[float, float, float]:
        return (
            self.lambda_k_sub - self.lambda_k_A,
            self.lambda_k_M + self.a_target - self.lambda_k_sub,
            -self.lambda_k_M,
        )


def _certify(S: HermitianMatrix, k: int, lam_a: float, det_M=None) -> Certificate:
    r = 2 * k - 1
    block = leading_block(S, r)
    _, M = split_diag_offdiag(block)
    lam_sub = float(eigenvalues_fast(block)[k - 1])
    lam_M = float(eigenvalues_fast(M)[k - 1])
    a_target = float(S.diagonal[r - 1])
    trace_M = float(M.data.diagonal().real.sum())
    tau = S.tolerance()
    valid = (
        lam_a <= lam_sub + tau
        and lam_sub <= lam_M + a_target + tau
        and lam_M <= tau
        and abs(trace_M) <= tau
    )
    return Certificate(k, float(lam_a), lam_sub, lam_M, a_target, bool(valid), tau, trace_M, det_M)


def certify_theorem1(A: HermitianMatrix, spectrum=None) -> Certificate:
    """Replay the k = 2 chain on the diagonal-sorted matrix, given det M3 >= 0."""
    if A.n < 3:
        raise OrderTooSmall(f"theorem 1 needs n >= 3, got {A.n}")
    det = det_m3(A)
    if det < -det_m3_tolerance(A):
        raise HypothesisViolated(f"det M3 = {det:.6g} < 0")
    S, _ = normalize_diagonal_order(A)
    lam = _lam(A, spectrum)
    return _certify(S, 2, lam[1], det_M=det)


def certify_theorem2(A: HermitianMatrix, k: int, force: bool = False, spectrum=None) -> Certificate:
    if not is_class_i(A) and not force:
        raise ClassNotApplicable("theorem 2 needs purely imaginary off-diagonal entries")
    if not 1 <= k <= ceil_half(A.n):
        raise IndexOutOfRange(f"k = {k} outside 1..{ceil_half(A.n)}")
    S, _ = normalize_diagonal_order(A)
    lam = _lam(A, spectrum)
    return _certify(S, k, lam[k - 1])


def certify_all(A: HermitianMatrix, force: bool = False, spectrum=None) -> list[Certificate]:
    lam = _lam(A, spectrum)
    return [certify_theorem2(A, k, force, lam) for k in range(1, ceil_half(A.n) + 1)]


def offdiagonal_spectrum_pairing(M: HermitianMatrix, force: bool = False, spectrum=None) -> InequalityReport:
    """Spectrum of a zero-diagonal class-I matrix is symmetric about zero."""
    tol = class_tolerance(M)
    if np.abs(M.diagonal).max() > tol:
        raise NotZeroDiagonal("pairing check needs a zero diagonal")
    supported = is_class_i(M)
    if not supported and not force:
        raise ClassNotApplicable("pairing check needs purely imaginary entries")
    lam = _lam(M, spectrum)
    r = M.n
    comps = []
    for j in range(1, r // 2 + 1):
        comps.append(Comparison("pair", (j, r + 1 - j), abs(lam[j - 1] + lam[r - j]), 0.0))
    for k in range(1, ceil_half(r) + 1):
        comps.append(Comparison("nonpos", (k,), lam[k - 1], 0.0))
    if r % 2 == 1:
        mid = ceil_half(r)
        comps.append(Comparison("middle", (mid,), abs(lam[mid - 1]), 0.0))
    parts = tuple(dict.fromkeys(c.label for c in comps))
    return _report("pairing", comps, M.tolerance(), parts, () if supported else parts)

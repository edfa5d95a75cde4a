"""The two class-P counterexamples and a seeded search for more of them.

A search runs ``trials`` independent draws; trial ``t`` uses the generator
seeded with ``seed ^ t``, so any witness can be replayed from its task.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from eigdiag.classes import ClassTag, random_class_i, random_class_p
from eigdiag.errors import InvalidTask
from eigdiag.inequalities import ceil_half
from eigdiag.linalg import HermitianMatrix, eigenvalues_fast, make_hermitian
from eigdiag.oracle import MAX_ORDER, oracle_eigenvalues

DEFAULT_SEED = 20220101
FAMILIES = ("lower", "upper")


def counterexample_e_minus_i() -> HermitianMatrix:
    """E - I of order 4: zero diagonal, ones elsewhere; spectrum (-1, -1, -1, 3)."""
    return make_hermitian(np.ones((4, 4)) - np.eye(4))


def shift_matrix(n: int = 5) -> np.ndarray:
    return np.roll(np.eye(n, dtype=np.int64), 1, axis=1)


def counterexample_shift_circulant() -> HermitianMatrix:
    """B = S^2 + S^3 for the 5x5 cyclic shift S."""
    s = shift_matrix(5)
    b = np.linalg.matrix_power(s, 2) + np.linalg.matrix_power(s, 3)
    return make_hermitian(b.astype(float))


def family_slack(lam: np.ndarray, a: np.ndarray, family: str, k: int) -> float:
    """Slack of lambda_k <= a_{2k-1} ("lower") or lambda_{n-k+1} >= a_{n-2k+2} ("upper")."""
    n = lam.size
    if family == "lower":
        return float(a[2 * k - 2] - lam[k - 1])
    return float(lam[n - k] - a[n - 2 * k + 1])


@dataclass(frozen=True)
class SearchTask:
    target_class: ClassTag
    family: str
    k: int
    n: int
    trials: int
    seed: int = DEFAULT_SEED
    diag_range: tuple[float, float] = (-1.0, 1.0)
    offdiag_max: float = 1.0
    quantized: bool = False

    def __post_init__(self):
        tag = self.target_class
        try:
            tag = ClassTag(tag)
        except ValueError:
            raise InvalidTask(f"unknown class {self.target_class!r}") from None
        if tag not in (ClassTag.CLASS_P, ClassTag.CLASS_I):
            raise InvalidTask("search supports classes P and I only")
        object.__setattr__(self, "target_class", tag)
        if self.family not in FAMILIES:
            raise InvalidTask(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not 1 <= self.n <= MAX_ORDER:
            raise InvalidTask(f"n must be in 1..{MAX_ORDER}, got {self.n}")
        if not 1 <= self.k <= ceil_half(self.n):
            raise InvalidTask(f"k = {self.k} outside 1..{ceil_half(self.n)}")
        if self.trials < 1:
            raise InvalidTask("trials must be >= 1")
        lo, hi = self.diag_range
        if lo > hi or self.offdiag_max < 0:
            raise InvalidTask("bad generator parameters")

    def draw(self, trial: int) -> HermitianMatrix:
        gen = random_class_p if self.target_class is ClassTag.CLASS_P else random_class_i
        return gen(self.n, self.seed ^ trial, self.diag_range, self.offdiag_max, self.quantized)


@dataclass(frozen=True)
class Witness:
    matrix: HermitianMatrix
    slack: float
    oracle_slack: float
    seed: int
    trial: int


@dataclass(frozen=True)
class SearchOutcome:
    violations_found: int
    first_witness: Witness | None
    trials_run: int
    rejected_by_oracle: int = 0
    worst_slack: float = field(default=float("inf"))


def search_violations(task: SearchTask) -> SearchOutcome:
    """Draw ``task.trials`` matrices and count oracle-confirmed violations."""
    return search_many(task, [(task.family, task.k)])[0]


def search_many(task: SearchTask, inequalities) -> list[SearchOutcome]:
    """Like :func:`search_violations` for several ``(family, k)`` targets over the same draws.

    ``task.family`` and ``task.k`` are ignored; each target is validated
    against ``task.n``.
    """
    targets = list(inequalities)
    for family, k in targets:
        if family not in FAMILIES or not 1 <= k <= ceil_half(task.n):
            raise InvalidTask(f"bad inequality target ({family}, {k}) for n = {task.n}")
    found = [0] * len(targets)
    rejected = [0] * len(targets)
    first = [None] * len(targets)
    worst = [float("inf")] * len(targets)
    for trial in range(task.trials):
        A = task.draw(trial)
        a = np.sort(A.diagonal)
        lam = eigenvalues_fast(A)
        tau = A.tolerance()
        oracle_lam = None
        for i, (family, k) in enumerate(targets):
            slack = family_slack(lam, a, family, k)
            worst[i] = min(worst[i], slack)
            if slack >= -tau:
                continue
            # a witness only counts once the independent oracle agrees
            if oracle_lam is None:
                oracle_lam = oracle_eigenvalues(A).values
            oracle_slack = family_slack(oracle_lam, a, family, k)
            if oracle_slack >= -tau / 2:
                rejected[i] += 1
                continue
            found[i] += 1
            if first[i] is None:
                first[i] = Witness(A, slack, oracle_slack, task.seed ^ trial, trial)
    return [
        SearchOutcome(found[i], first[i], task.trials, rejected[i], worst[i])
        for i in range(len(targets))
    ]

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from eigdiag.linalg import make_hermitian

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def hermitian_matrices(draw, min_n=1, max_n=8, kind="general"):
    """Hermitian matrices built from drawn real/imaginary parts.

    ``kind`` restricts the off-diagonal entries: "P" nonnegative reals,
    "I" purely imaginary, "general" unrestricted.
    """
    n = draw(st.integers(min_n, max_n))
    d = draw(arrays(np.float64, (n,), elements=finite))
    re = draw(arrays(np.float64, (n, n), elements=finite))
    im = draw(arrays(np.float64, (n, n), elements=finite))
    if kind == "P":
        off = np.abs(re).astype(np.complex128)
    elif kind == "I":
        off = 1j * im
    else:
        off = re + 1j * im
    upper = np.triu(off, 1)
    a = upper + upper.conj().T + np.diag(d)
    return make_hermitian(a)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL verdict for the acceptance summary."""

    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}  {detail}".rstrip())
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

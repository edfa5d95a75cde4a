"""Print the spectra and failing comparisons of the two class-P counterexamples."""

import math

from eigdiag.explorer import counterexample_e_minus_i, counterexample_shift_circulant
from eigdiag.inequalities import check_theorem1, check_theorem2
from eigdiag.linalg import eigenvalues
from eigdiag.oracle import oracle_eigenvalues


def show(name, A, report):
    print(f"== {name}")
    print("  jacobi:", " ".join(f"{x:.15f}" for x in eigenvalues(A).values))
    print("  oracle:", " ".join(f"{x:.15f}" for x in oracle_eigenvalues(A).values))
    for c in report.comparisons:
        flag = "FAIL" if c.slack < -report.tolerance else "ok"
        print(f"  {c.label:<6} {c.index}  lhs={c.lhs: .12f} rhs={c.rhs: .12f} slack={c.slack: .3e} {flag}")


if __name__ == "__main__":
    show("E - I (4x4)", counterexample_e_minus_i(), check_theorem1(counterexample_e_minus_i(), force=True))
    B = counterexample_shift_circulant()
    show("S^2 + S^3 (5x5)", B, check_theorem2(B, force=True))
    print(f"  reference: 2cos(4pi/5)={2 * math.cos(4 * math.pi / 5):.15f}  2cos(2pi/5)={2 * math.cos(2 * math.pi / 5):.15f}")

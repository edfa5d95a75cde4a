"""Eigenvalue/diagonal inequalities for Hermitian matrices with structured off-diagonals."""

from eigdiag.classes import (
    ClassTag,
    WeightedGraph,
    classify,
    det_m3,
    normalize_diagonal_order,
    random_class_i,
    random_class_p,
    random_hermitian,
    signless_laplacian,
)
from eigdiag.errors import *  # noqa: F401,F403
from eigdiag.explorer import (
    SearchOutcome,
    SearchTask,
    counterexample_e_minus_i,
    counterexample_shift_circulant,
    search_violations,
)
from eigdiag.inequalities import (
    Certificate,
    InequalityReport,
    certify_theorem1,
    certify_theorem2,
    check_basic_bounds,
    check_interlacing,
    check_schur_majorization,
    check_theorem1,
    check_theorem2,
    check_weyl,
    offdiagonal_spectrum_pairing,
)
from eigdiag.linalg import (
    HermitianMatrix,
    Spectrum,
    eigenvalues,
    make_hermitian,
    negate,
    principal_submatrix,
    split_diag_offdiag,
)
from eigdiag.oracle import oracle_eigenvalues

__version__ = "0.1.0"

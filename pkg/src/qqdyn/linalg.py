"""Dense complex linear algebra for the 6-dimensional qubit-qutrit space.

Everything here operates on plain complex ndarrays and every function is
pure.  The composite space is ordered qubit-major: basis index = 3*q + t with
q in {0, 1} the qubit level and t in {0, 1, 2} the qutrit level.
"""

from __future__ import annotations

import numpy as np

QUBIT_DIM = 2
QUTRIT_DIM = 3
TOTAL_DIM = QUBIT_DIM * QUTRIT_DIM

#: Default absolute tolerance when deciding whether a matrix is Hermitian.
HERMITICITY_TOL = 1e-10


def _as_square(a: np.ndarray, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square 2-d array, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} contains NaN or Inf entries")
    return a


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of two equally sized square matrices."""
    a = _as_square(a, "a")
    b = _as_square(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermiticity_defect(a: np.ndarray) -> float:
    """Largest absolute deviation of ``a`` from its conjugate transpose."""
    a = _as_square(a)
    return float(np.abs(a - a.conj().T).max())


def hermitian_eigenvalues(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    The input is symmetrized to (a + a^dagger)/2 before solving so that
    rounding drift accumulated by channel algebra cannot leak into complex
    eigenvalues.  Raises ValueError when the defect exceeds ``tol``.
    """
    a = _as_square(a)
    defect = float(np.abs(a - a.conj().T).max())
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian within {tol} (defect {defect:.3e})")
    return np.linalg.eigvalsh((a + a.conj().T) / 2.0)


def trace_norm(a: np.ndarray, tol: float = HERMITICITY_TOL) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.abs(hermitian_eigenvalues(a, tol)).sum())


def partial_transpose_qutrit(rho: np.ndarray) -> np.ndarray:
    """Transpose the qutrit indices of a 6x6 composite matrix.

    Viewing ``rho`` as a 2x2 grid of 3x3 blocks, each block is transposed in
    place.  The operation is an involution and preserves trace and
    Hermiticity.
    """
    rho = _as_square(rho, "rho")
    if rho.shape != (TOTAL_DIM, TOTAL_DIM):
        raise ValueError(f"expected a {TOTAL_DIM}x{TOTAL_DIM} matrix, got {rho.shape}")
    return (
        rho.reshape(QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM)
        .transpose(0, 3, 2, 1)
        .reshape(TOTAL_DIM, TOTAL_DIM)
        .copy()
    )

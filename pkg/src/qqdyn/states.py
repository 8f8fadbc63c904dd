"""The two-parameter qubit-qutrit state family and validated density matrices.

The family mixes the four Bell-like states living in the qutrit {0, 1}
sub-block with the two pure levels |02> and |12>:

    rho(0) = a (|02><02| + |12><12|)
           + b (|phi+><phi+| + |phi-><phi-| + |psi+><psi+|)
           + c |psi-><psi-|,

with 2a + 3b + c = 1.  Taking (b, c) as free and a derived keeps the triple
consistent by construction.  The family is entangled exactly when
3b < c <= 1 - 3b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import HERMITICITY_TOL, TOTAL_DIM

TRACE_TOL = 1e-10
PSD_TOL = 1e-10

BELL_KINDS = ("phi+", "phi-", "psi+", "psi-")

# Composite basis positions of the two-qubit-like levels: |00>, |11>, |01>, |10>.
_IDX_00, _IDX_11, _IDX_01, _IDX_10 = 0, 4, 1, 3


@dataclass(frozen=True)
class StateParams:
    """Weights (b, c) of the state family; the third weight a is derived.

    Invariants enforced at construction: a = (1 - 3b - c)/2 must be
    non-negative and all three weights must lie in [0, 1].
    """

    b: float
    c: float

    def __post_init__(self) -> None:
        b, c = float(self.b), float(self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if not (0.0 <= b <= 1.0 and 0.0 <= c <= 1.0):
            raise ValueError(f"b and c must lie in [0, 1], got b={b}, c={c}")
        if self.a < -1e-12:
            raise ValueError(
                f"weights require 3b + c <= 1, got b={b}, c={c} (a={self.a:.3e})"
            )

    @property
    def a(self) -> float:
        return (1.0 - 3.0 * self.b - self.c) / 2.0

    @property
    def is_entangled(self) -> bool:
        """True inside the entangled regime 3b < c <= 1 - 3b.

        The upper bound holds for every constructible instance (it is the
        a >= 0 constraint), so only the lower bound is tested; comparing the
        upper bound again here would misclassify points sitting on it to
        within float rounding.
        """
        return 3.0 * self.b < self.c

    @classmethod
    def a_zero(cls, b: float) -> "StateParams":
        """The a = 0 sub-family, c = 1 - 3b."""
        return cls(b, 1.0 - 3.0 * b)


@dataclass(frozen=True)
class DensityMatrix:
    """A validated 6x6 density matrix over the qubit-qutrit space.

    Construction checks Hermiticity, unit trace, and positive
    semidefiniteness (all to 1e-10); the stored array is an immutable copy.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (TOTAL_DIM, TOTAL_DIM):
            raise ValueError(f"expected {TOTAL_DIM}x{TOTAL_DIM}, got {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("density matrix contains NaN or Inf")
        defect = np.abs(m - m.conj().T).max()
        if defect > HERMITICITY_TOL:
            raise ValueError(f"not Hermitian (defect {defect:.3e})")
        tr = m.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got {tr}")
        min_eig = np.linalg.eigvalsh((m + m.conj().T) / 2.0).min()
        if min_eig < -PSD_TOL:
            raise ValueError(f"not positive semidefinite (min eigenvalue {min_eig:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def purity(self) -> float:
        return float((self.matrix @ self.matrix).trace().real)


def _projector(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def bell_state(kind: str) -> DensityMatrix:
    """Projector onto one of the Bell-like states, embedded in the 6-d space.

    ``kind`` is one of "phi+", "phi-", "psi+", "psi-";  phi states
    superpose |00> and |11>, psi states superpose |01> and |10>.  The qutrit
    level |2> is unpopulated.
    """
    if kind not in BELL_KINDS:
        raise ValueError(f"unknown Bell state {kind!r}, expected one of {BELL_KINDS}")
    v = np.zeros(TOTAL_DIM, dtype=complex)
    i, j = (_IDX_00, _IDX_11) if kind.startswith("phi") else (_IDX_01, _IDX_10)
    sign = 1.0 if kind.endswith("+") else -1.0
    v[i] = 1.0 / np.sqrt(2.0)
    v[j] = sign / np.sqrt(2.0)
    return DensityMatrix(_projector(v))


def initial_state(params: StateParams) -> DensityMatrix:
    """The family state at zero noise, built as the defining projector mixture."""
    e2 = np.zeros(TOTAL_DIM, dtype=complex)
    e5 = np.zeros(TOTAL_DIM, dtype=complex)
    e2[2] = 1.0
    e5[5] = 1.0
    m = params.a * (_projector(e2) + _projector(e5))
    for kind in ("phi+", "phi-", "psi+"):
        m = m + params.b * bell_state(kind).matrix
    m = m + params.c * bell_state("psi-").matrix
    return DensityMatrix(m)


def initial_negativity(params: StateParams) -> float:
    """Negativity of the zero-noise state: max(0, c - 3b)."""
    return max(0.0, params.c - 3.0 * params.b)

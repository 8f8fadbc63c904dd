"""Kraus operator families for the five single-side noise channels.

Each builder returns a :class:`KrausChannel` whose operators are full 6x6
matrices: a qubit-side operator is padded as (op x I3), a qutrit-side one as
(I2 x op).  A channel application is then always the plain sum
sum_i K_i rho K_i^dagger in the composite space, regardless of side.

All five channels admit the strength parametrization gamma = 1 - exp(-t * rate)
in [0, 1]; gamma = 0 is the identity channel and gamma = 1 the infinite-time
limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import TOTAL_DIM

COMPLETENESS_TOL = 1e-12

#: Primitive cube root of unity used by the qutrit phase operators.
OMEGA = np.exp(2j * np.pi / 3.0)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

I2 = np.eye(2, dtype=complex)
I3 = np.eye(3, dtype=complex)

#: Qutrit cyclic shift (|0> -> |2> -> |1> -> |0>) and phase diag(1, w, w*).
QUTRIT_SHIFT = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)
QUTRIT_PHASE = np.diag([1.0, OMEGA, np.conj(OMEGA)])


class ChannelKind(str, Enum):
    DEPHASING = "dephasing"
    PHASE_FLIP = "phaseflip"
    BIT_FLIP = "bitflip"
    BIT_PHASE_FLIP = "bitphaseflip"
    DEPOLARIZING = "depolarizing"


class Side(str, Enum):
    QUBIT = "qubit"
    QUTRIT = "qutrit"


@dataclass(frozen=True)
class NoiseStrength:
    """A noise strength gamma in [0, 1], optionally derived from a decay rate.

    When ``rate`` and ``time`` are supplied, gamma must equal
    1 - exp(-time * rate) to within 1e-12.
    """

    gamma: float
    rate: float | None = None
    time: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")
        if (self.rate is None) != (self.time is None):
            raise ValueError("rate and time must be given together")
        if self.rate is not None:
            if self.rate < 0.0 or self.time < 0.0:
                raise ValueError("rate and time must be non-negative")
            expected = -math.expm1(-self.time * self.rate)
            if abs(self.gamma - expected) > 1e-12:
                raise ValueError(
                    f"gamma={self.gamma} inconsistent with rate/time (expected {expected})"
                )

    @classmethod
    def from_rate_time(cls, rate: float, time: float) -> "NoiseStrength":
        return cls(-math.expm1(-time * rate), rate=rate, time=time)


def _as_gamma(strength: float | NoiseStrength) -> float:
    if isinstance(strength, NoiseStrength):
        return strength.gamma
    g = float(strength)
    if not 0.0 <= g <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {g}")
    return g


@dataclass(frozen=True)
class KrausChannel:
    """An ordered set of 6x6 Kraus operators for one channel kind and side.

    The completeness relation sum_i K_i^dagger K_i = I6 is certified at
    construction to within ``COMPLETENESS_TOL``.  Zero operators (as produced
    at gamma = 0) are kept so operator counts are strength-independent.
    """

    operators: tuple[np.ndarray, ...]
    kind: ChannelKind
    side: Side
    gamma: float

    def __post_init__(self) -> None:
        ops = []
        total = np.zeros((TOTAL_DIM, TOTAL_DIM), dtype=complex)
        for op in self.operators:
            op = np.array(op, dtype=complex)
            if op.shape != (TOTAL_DIM, TOTAL_DIM):
                raise ValueError(f"Kraus operator has shape {op.shape}")
            total += op.conj().T @ op
            op.setflags(write=False)
            ops.append(op)
        defect = np.abs(total - np.eye(TOTAL_DIM)).max()
        if defect > COMPLETENESS_TOL:
            raise ValueError(f"completeness violated: max deviation {defect:.3e}")
        object.__setattr__(self, "operators", tuple(ops))


#: Expected operator counts per (kind, side).
OPERATOR_COUNTS = {
    (ChannelKind.DEPHASING, Side.QUBIT): 2,
    (ChannelKind.DEPHASING, Side.QUTRIT): 3,
    (ChannelKind.PHASE_FLIP, Side.QUBIT): 2,
    (ChannelKind.PHASE_FLIP, Side.QUTRIT): 3,
    (ChannelKind.BIT_FLIP, Side.QUBIT): 2,
    (ChannelKind.BIT_FLIP, Side.QUTRIT): 3,
    (ChannelKind.BIT_PHASE_FLIP, Side.QUBIT): 2,
    (ChannelKind.BIT_PHASE_FLIP, Side.QUTRIT): 5,
    (ChannelKind.DEPOLARIZING, Side.QUBIT): 4,
    (ChannelKind.DEPOLARIZING, Side.QUTRIT): 9,
}


def _pad(op: np.ndarray, side: Side) -> np.ndarray:
    if side is Side.QUBIT:
        return np.kron(op, I3)
    return np.kron(I2, op)


def dephasing(side: Side, strength: float | NoiseStrength) -> KrausChannel:
    """Pure decoherence: diagonal operators damp off-diagonal entries only."""
    g = _as_gamma(strength)
    if side is Side.QUBIT:
        ops = [np.diag([1.0, np.sqrt(1.0 - g)]), np.diag([0.0, np.sqrt(g)])]
    else:
        r = np.sqrt(1.0 - g)
        ops = [
            np.diag([1.0, r, r]),
            np.diag([0.0, np.sqrt(g), 0.0]),
            np.diag([0.0, 0.0, np.sqrt(g)]),
        ]
    mats = tuple(_pad(np.asarray(o, dtype=complex), side) for o in ops)
    return KrausChannel(mats, ChannelKind.DEPHASING, side, g)


def phase_flip(side: Side, strength: float | NoiseStrength) -> KrausChannel:
    """Probabilistic phase errors: sigma_z on the qubit, cube-root phases on the qutrit."""
    g = _as_gamma(strength)
    if side is Side.QUBIT:
        ops = [np.sqrt(1.0 - g / 2.0) * I2, np.sqrt(g / 2.0) * SIGMA_Z]
    else:
        ops = [
            np.sqrt(1.0 - 2.0 * g / 3.0) * I3,
            np.sqrt(g / 3.0) * np.diag([1.0, np.conj(OMEGA), OMEGA]),
            np.sqrt(g / 3.0) * np.diag([1.0, OMEGA, np.conj(OMEGA)]),
        ]
    mats = tuple(_pad(o, side) for o in ops)
    return KrausChannel(mats, ChannelKind.PHASE_FLIP, side, g)


def bit_flip(side: Side, strength: float | NoiseStrength) -> KrausChannel:
    """Probabilistic level flips: sigma_x on the qubit, cyclic shifts on the qutrit."""
    g = _as_gamma(strength)
    if side is Side.QUBIT:
        ops = [np.sqrt(1.0 - g / 2.0) * I2, np.sqrt(g / 2.0) * SIGMA_X]
    else:
        shift_down = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
        ops = [
            np.sqrt(1.0 - 2.0 * g / 3.0) * I3,
            np.sqrt(g / 3.0) * shift_down,
            np.sqrt(g / 3.0) * QUTRIT_SHIFT,
        ]
    mats = tuple(_pad(o, side) for o in ops)
    return KrausChannel(mats, ChannelKind.BIT_FLIP, side, g)


def bit_phase_flip(side: Side, strength: float | NoiseStrength) -> KrausChannel:
    """Combined flip and phase errors: sigma_y on the qubit, phased shifts on the qutrit."""
    g = _as_gamma(strength)
    if side is Side.QUBIT:
        ops = [np.sqrt(1.0 - g / 2.0) * I2, np.sqrt(g / 2.0) * SIGMA_Y]
    else:
        w, wc = OMEGA, np.conj(OMEGA)
        m2 = np.array([[0, 0, w], [1, 0, 0], [0, wc, 0]], dtype=complex)
        m4 = np.array([[0, wc, 0], [0, 0, w], [1, 0, 0]], dtype=complex)
        ops = [np.sqrt(1.0 - 2.0 * g / 3.0) * I3] + [
            np.sqrt(g / 6.0) * m for m in (m2, np.conj(m2), m4, np.conj(m4))
        ]
    mats = tuple(_pad(o, side) for o in ops)
    return KrausChannel(mats, ChannelKind.BIT_PHASE_FLIP, side, g)


def depolarizing(side: Side, strength: float | NoiseStrength) -> KrausChannel:
    """Uniform noise driving the affected marginal toward the maximally mixed state.

    The qubit side mixes the three Pauli operators; the qutrit side mixes the
    eight non-identity products of the shift and phase operators, each with
    prefactor sqrt(gamma)/3.
    """
    g = _as_gamma(strength)
    if side is Side.QUBIT:
        ops = [np.sqrt(1.0 - 3.0 * g / 4.0) * I2] + [
            np.sqrt(g / 4.0) * s for s in (SIGMA_X, SIGMA_Y, SIGMA_Z)
        ]
    else:
        y, z = QUTRIT_SHIFT, QUTRIT_PHASE
        words = (y, z, y @ y, y @ z, y @ y @ z, y @ z @ z, y @ y @ z @ z, z @ z)
        ops = [np.sqrt(1.0 - 8.0 * g / 9.0) * I3] + [
            (np.sqrt(g) / 3.0) * w for w in words
        ]
    mats = tuple(_pad(o, side) for o in ops)
    return KrausChannel(mats, ChannelKind.DEPOLARIZING, side, g)


_BUILDERS = {
    ChannelKind.DEPHASING: dephasing,
    ChannelKind.PHASE_FLIP: phase_flip,
    ChannelKind.BIT_FLIP: bit_flip,
    ChannelKind.BIT_PHASE_FLIP: bit_phase_flip,
    ChannelKind.DEPOLARIZING: depolarizing,
}


def make_channel(kind: ChannelKind, side: Side, strength: float | NoiseStrength) -> KrausChannel:
    return _BUILDERS[ChannelKind(kind)](Side(side), strength)

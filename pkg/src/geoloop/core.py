"""States, Bloch vectors, piecewise-constant drives, and exact propagators.

Everything here is closed-form 2x2 linear algebra with hbar = 1: a drive
segment with unit axis n, angular frequency omega, and duration tau generates
H = (omega/2) (n . sigma) and the propagator U = exp(-i H tau), evaluated
through the axis-angle identity rather than a series expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

NORM_TOL = 1e-12
STATE_INPUT_TOL = 1e-9


class NonUnitAxisError(ValueError):
    """Rotation axis is not a unit vector."""


class NonNormalizedStateError(ValueError):
    """State amplitudes are not normalized."""


@dataclass(frozen=True)
class QubitState:
    """Pure qubit state (amp_up, amp_down) in the computational basis."""

    amp_up: complex
    amp_down: complex

    def __post_init__(self):
        norm = abs(self.amp_up) ** 2 + abs(self.amp_down) ** 2
        if abs(norm - 1.0) > STATE_INPUT_TOL:
            raise NonNormalizedStateError(
                f"|amp_up|^2 + |amp_down|^2 = {norm!r}, expected 1"
            )
        # Renormalize the residual so downstream algebra sees norm 1 to 1e-12.
        scale = 1.0 / math.sqrt(norm)
        object.__setattr__(self, "amp_up", complex(self.amp_up) * scale)
        object.__setattr__(self, "amp_down", complex(self.amp_down) * scale)

    def as_vector(self) -> np.ndarray:
        return np.array([self.amp_up, self.amp_down], dtype=complex)

    def inner(self, other: "QubitState") -> complex:
        """<self|other>."""
        return (
            np.conj(self.amp_up) * other.amp_up
            + np.conj(self.amp_down) * other.amp_down
        )


@dataclass(frozen=True)
class BlochVector:
    """Unit vector on the Bloch sphere."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


@dataclass(frozen=True)
class ControlSegment:
    """One piece of a piecewise-constant drive: H = (omega/2) (axis . sigma).

    Zero-duration segments are legal and act as the identity.
    """

    axis: tuple[float, float, float]
    omega: float
    duration: float

    def __post_init__(self):
        ax = tuple(float(c) for c in self.axis)
        if len(ax) != 3:
            raise NonUnitAxisError(f"axis must have 3 components, got {len(ax)}")
        norm = math.sqrt(sum(c * c for c in ax))
        if abs(norm - 1.0) > NORM_TOL:
            raise NonUnitAxisError(f"axis norm {norm!r} differs from 1")
        if self.omega < 0:
            raise ValueError(f"omega must be >= 0, got {self.omega}")
        if self.duration < 0:
            raise ValueError(f"duration must be >= 0, got {self.duration}")
        object.__setattr__(self, "axis", ax)
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "duration", float(self.duration))

    def hamiltonian(self) -> np.ndarray:
        nx, ny, nz = self.axis
        return 0.5 * self.omega * (nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z)


@dataclass(frozen=True)
class Schedule:
    """Ordered list of drive segments; empty schedule is the identity."""

    segments: tuple[ControlSegment, ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def total_duration(self) -> float:
        return sum(seg.duration for seg in self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)


def reduce_angle(theta: float) -> float:
    """Reduce an angle to [-pi, pi).

    Inputs anywhere on the real line are accepted; they are folded mod 2*pi
    before use instead of being rejected.
    """
    return math.remainder(theta, 2.0 * math.pi)


def state_from_angles(chi: float, phi: float, branch: str = "plus") -> QubitState:
    """Cyclic-basis state at spherical coordinates (chi, phi).

    The plus branch points along (chi, phi) on the Bloch sphere, the minus
    branch is its orthogonal complement (antipodal point). Angles outside
    the nominal ranges are reduced mod 2*pi.
    """
    if not (math.isfinite(chi) and math.isfinite(phi)):
        raise ValueError("chi and phi must be finite")
    chi = reduce_angle(chi)
    phi = reduce_angle(phi)
    c, s = math.cos(chi / 2), math.sin(chi / 2)
    em = np.exp(-0.5j * phi)
    ep = np.exp(0.5j * phi)
    if branch == "plus":
        return QubitState(em * c, ep * s)
    if branch == "minus":
        return QubitState(-em * s, ep * c)
    raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")


def bloch_vector(state: QubitState) -> BlochVector:
    """Map a normalized state to its Bloch vector; global phase drops out."""
    a, b = state.amp_up, state.amp_down
    return BlochVector(
        x=2.0 * (np.conj(a) * b).real,
        y=2.0 * (np.conj(a) * b).imag,
        z=abs(a) ** 2 - abs(b) ** 2,
    )


def segment_unitary(seg: ControlSegment) -> np.ndarray:
    """Exact propagator exp(-i H tau) via the axis-angle closed form.

    With theta = omega * tau:
        U = cos(theta/2) I - i sin(theta/2) (n . sigma)
    """
    theta = seg.omega * seg.duration
    nx, ny, nz = seg.axis
    n_sigma = nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z
    return math.cos(theta / 2) * IDENTITY_2 - 1j * math.sin(theta / 2) * n_sigma


def schedule_unitary(sched: Schedule) -> np.ndarray:
    """Time-ordered product of segment propagators (first segment rightmost)."""
    u = IDENTITY_2.copy()
    for seg in sched:
        u = segment_unitary(seg) @ u
    return u


def apply_unitary(u: np.ndarray, state: QubitState) -> QubitState:
    vec = u @ state.as_vector()
    return QubitState(vec[0], vec[1])


def propagate(sched: Schedule, initial: QubitState) -> QubitState:
    """Final state after the whole schedule."""
    return apply_unitary(schedule_unitary(sched), initial)


def unitarity_defect(u: np.ndarray) -> float:
    """Max-entry deviation of U†U from the identity."""
    dim = u.shape[0]
    return float(np.max(np.abs(u.conj().T @ u - np.eye(dim))))

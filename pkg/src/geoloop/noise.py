"""Monte Carlo control-error sweeps over drive schedules.

Exploratory harness: each trial multiplies every segment's frequency and
duration by independent Gaussian factors (1 + eps) and reports the
global-phase-blind trace fidelity against a target gate. The model is a
choice of this library, not a quantitative reproduction of any published
robustness analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import Schedule, schedule_unitary


@dataclass(frozen=True)
class NoiseSpec:
    """Relative Gaussian error levels, trial count, and RNG seed."""

    sigma_omega: float = 0.0
    sigma_tau: float = 0.0
    trials: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.sigma_omega < 0 or self.sigma_tau < 0:
            raise ValueError("sigmas must be >= 0")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class SweepResult:
    """Per-trial fidelities and their summary statistics."""

    fidelities: tuple[float, ...]
    mean: float
    minimum: float
    std: float
    spec: NoiseSpec


def perturb_schedule(sched: Schedule, spec: NoiseSpec, trial_index: int) -> Schedule:
    """Deterministic perturbed copy of the schedule for one trial.

    omega -> omega * (1 + eps), tau -> tau * (1 + delta) with independent
    Gaussian eps, delta per segment; axes are untouched. Results are
    clamped at zero so segment invariants survive large draws. The stream
    depends only on (seed, trial_index).
    """
    if spec.sigma_omega == 0.0 and spec.sigma_tau == 0.0:
        return sched
    rng = np.random.default_rng([spec.seed & 0xFFFFFFFFFFFFFFFF, trial_index])
    segments = []
    for seg in sched:
        omega = seg.omega * (1.0 + spec.sigma_omega * rng.standard_normal())
        tau = seg.duration * (1.0 + spec.sigma_tau * rng.standard_normal())
        segments.append(replace(seg, omega=max(omega, 0.0), duration=max(tau, 0.0)))
    return Schedule(segments=tuple(segments), label=sched.label)


def fidelity_sweep(sched: Schedule, target: np.ndarray, spec: NoiseSpec) -> SweepResult:
    """Trace fidelity |tr(target^dag U)| / 2 over perturbed realizations."""
    target = np.asarray(target, dtype=complex)
    dim = target.shape[0]
    fidelities = []
    for trial in range(spec.trials):
        u = schedule_unitary(perturb_schedule(sched, spec, trial))
        fidelities.append(float(abs(np.trace(target.conj().T @ u)) / dim))
    arr = np.array(fidelities)
    return SweepResult(
        fidelities=tuple(fidelities),
        mean=float(arr.mean()),
        minimum=float(arr.min()),
        std=float(arr.std()),
        spec=spec,
    )

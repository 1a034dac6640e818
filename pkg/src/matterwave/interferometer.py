"""Two-arm delayed-choice interferometer with lossless 50/50 splitters.

The photon is a single two-mode amplitude (amp_upper, amp_lower); there is
no spatial structure, loss, or which-path marking.  Conventions are pinned
so the worked numbers below are reproducible:

- A splitter applies the symmetric unitary (1/sqrt 2)[[1, i], [i, 1]]:
  transmission keeps the arm, reflection crosses arms with a factor i.
- The source enters the *lower* input port of H1, i.e. the opening state
  is (0, 1).  With H2 in place the detector probabilities are then
  p_d1 = cos^2(phi/2), p_d2 = sin^2(phi/2) for relative arm phase
  phi = phase_upper - phase_lower; zero relative phase sends every photon
  to D1.
- The full mirrors M1/M2 reflect each arm exactly once, so they contribute
  a common phase that cancels in every probability; ``mirrors`` is the
  identity and exists only to keep the pipeline explicit.

Whether H2 acts depends only on "was H2 in place when the photon arrived";
the magnitude of the insertion time never enters the amplitudes, which is
the delayed-choice point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_NORM_TOL = 1e-12


@dataclass(frozen=True)
class ArmState:
    amp_upper: complex
    amp_lower: complex

    def __post_init__(self) -> None:
        if abs(self.norm() - 1.0) > _NORM_TOL:
            raise ValueError(f"arm state must be normalized: |u|^2+|l|^2 = {self.norm()!r}")

    def norm(self) -> float:
        return abs(self.amp_upper) ** 2 + abs(self.amp_lower) ** 2

    def probabilities(self) -> tuple[float, float]:
        return abs(self.amp_upper) ** 2, abs(self.amp_lower) ** 2

    @staticmethod
    def normalized(amp_upper: complex, amp_lower: complex) -> "ArmState":
        scale = math.sqrt(abs(amp_upper) ** 2 + abs(amp_lower) ** 2)
        if scale == 0.0 or not math.isfinite(scale):
            raise ValueError("cannot normalize a null or non-finite state")
        return ArmState(amp_upper / scale, amp_lower / scale)


#: Opening state: the photon enters the lower input port of H1.
SOURCE_STATE = ArmState(0.0 + 0.0j, 1.0 + 0.0j)


def beam_splitter(state: ArmState) -> ArmState:
    """Apply the symmetric lossless 50/50 splitter to both arms."""
    u, l = state.amp_upper, state.amp_lower
    return ArmState(_INV_SQRT2 * (u + 1j * l), _INV_SQRT2 * (1j * u + l))


def arm_phase(state: ArmState, phase_upper: float, phase_lower: float) -> ArmState:
    """Advance each arm by its accumulated phase (norm preserving)."""
    return ArmState(
        state.amp_upper * complex(math.cos(phase_upper), math.sin(phase_upper)),
        state.amp_lower * complex(math.cos(phase_lower), math.sin(phase_lower)),
    )


def mirrors(state: ArmState) -> ArmState:
    """Full mirrors M1/M2: one reflection per arm, a common phase only.

    A common phase cannot change any probability, so this is the identity.
    """
    return state


@dataclass(frozen=True)
class ExperimentConfig:
    h2_present: bool = False
    h2_insertion_time: float = 0.0     # relative; only its order vs arrival matters
    photon_arrival_time: float = 1.0
    phase_upper: float = 0.0
    phase_lower: float = 0.0
    arms_isolated: bool = True

    def __post_init__(self) -> None:
        if not self.arms_isolated:
            raise ValueError("only the isolated-arm geometry is modeled")

    def h2_in_place_at_arrival(self) -> bool:
        return self.h2_present and self.h2_insertion_time < self.photon_arrival_time


@dataclass(frozen=True)
class DetectorStats:
    p_d1: float
    p_d2: float
    clicks_d1: int = 0
    clicks_d2: int = 0
    seed: int | None = None

    def __post_init__(self) -> None:
        if abs(self.p_d1 + self.p_d2 - 1.0) > _NORM_TOL:
            raise ValueError(f"detector probabilities must sum to 1, got {self.p_d1 + self.p_d2!r}")
        if min(self.p_d1, self.p_d2) < -_NORM_TOL:
            raise ValueError("negative detector probability")
        if self.clicks_d1 < 0 or self.clicks_d2 < 0:
            raise ValueError("negative click count")


def run_experiment(config: ExperimentConfig) -> DetectorStats:
    """Propagate one photon through the pipeline and return probabilities.

    Pipeline: H1 splitter -> mirrors -> arm phases -> H2 splitter (only if
    it was in place before the photon arrived) -> |amplitude|^2 readout.
    """
    if not (config.photon_arrival_time > 0.0):
        raise ValueError("photon_arrival_time must be > 0")
    state = beam_splitter(SOURCE_STATE)
    state = mirrors(state)
    state = arm_phase(state, config.phase_upper, config.phase_lower)
    if config.h2_in_place_at_arrival():
        state = beam_splitter(state)
    p1, p2 = state.probabilities()
    return DetectorStats(p_d1=p1, p_d2=p2)


def sample_clicks(stats: DetectorStats, n: int, seed: int) -> DetectorStats:
    """Draw n Bernoulli(p_d1) detector clicks from a seeded generator.

    The same seed always reproduces the same counts; the seed used is
    recorded on the returned stats.
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    clicks_d1 = int(np.count_nonzero(rng.random(n) < stats.p_d1))
    return replace(stats, clicks_d1=clicks_d1, clicks_d2=n - clicks_d1, seed=seed)

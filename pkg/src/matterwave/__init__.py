"""Numerical quantum mechanics toolkit.

Four computations, one consistent set of conventions:

- delayed-choice two-arm interferometry (``interferometer``),
- free Gaussian wave-packet dispersion by closed form, spectral synthesis
  and propagator-kernel quadrature (``wavepacket``),
- Compton-wavelength localization bounds and the hydrogen chain
  (``bounds``),
- box microstate counting (``boxstates``),

plus a CLI (``matterwave``) emitting reproducible JSON/CSV.
"""

__version__ = "0.1.0"

from .constants import (
    BUILTIN_REGISTRY,
    NATURAL,
    SI,
    Particle,
    ParticleRegistry,
    PhysicalConstants,
    UnitSystem,
    UnknownParticleError,
    get_constants,
    lookup_particle,
)

__all__ = [
    "__version__",
    "BUILTIN_REGISTRY",
    "NATURAL",
    "SI",
    "Particle",
    "ParticleRegistry",
    "PhysicalConstants",
    "UnitSystem",
    "UnknownParticleError",
    "get_constants",
    "lookup_particle",
]

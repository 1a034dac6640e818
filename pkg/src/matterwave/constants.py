"""Physical constants and the shared particle registry.

Two constant sets are provided:

- ``SI``: CODATA-2018 values (h, c and e are exact by SI definition;
  hbar is derived as h/2pi so the pair stays consistent to the bit).
- ``NATURAL``: hbar = c = 1 with 4*pi*epsilon0 = 1, used wherever exact
  small-number algebra makes tests cleaner; masses are dimensionless.

Every other module takes a ``PhysicalConstants`` argument defaulting to
``SI`` so the same code path serves both modes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator, Mapping

TWO_PI = 2.0 * math.pi


class UnitSystem(str, Enum):
    SI = "si"
    NATURAL = "natural"


@dataclass(frozen=True)
class PhysicalConstants:
    """One immutable set of constants; all values strictly positive."""

    hbar: float      # J*s
    h: float         # J*s
    c: float         # m/s
    e_charge: float  # C
    epsilon0: float  # F/m
    G: float         # m^3/(kg*s^2)
    label: str = "custom"

    def __post_init__(self) -> None:
        for name in ("hbar", "h", "c", "e_charge", "epsilon0", "G"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"constant {name} must be finite and > 0, got {value!r}")
        if abs(self.h - TWO_PI * self.hbar) > 1e-12 * self.h:
            raise ValueError("inconsistent constants: h must equal 2*pi*hbar")


_PLANCK = 6.62607015e-34  # exact SI definition

SI = PhysicalConstants(
    hbar=_PLANCK / TWO_PI,
    h=_PLANCK,
    c=299792458.0,
    e_charge=1.602176634e-19,
    epsilon0=8.8541878128e-12,
    G=6.67430e-11,
    label="codata2018-si",
)

NATURAL = PhysicalConstants(
    hbar=1.0,
    h=TWO_PI,
    c=1.0,
    e_charge=1.0,
    epsilon0=1.0 / (4.0 * math.pi),  # 4*pi*epsilon0 = 1
    G=1.0,
    label="natural-hbar-c-1",
)


def get_constants(mode: UnitSystem | str) -> PhysicalConstants:
    return SI if UnitSystem(mode) is UnitSystem.SI else NATURAL


@dataclass(frozen=True)
class Particle:
    name: str
    mass: float  # kg (dimensionless in natural mode)

    def __post_init__(self) -> None:
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise ValueError(f"particle {self.name!r} needs mass > 0, got {self.mass!r}")


# Bundled masses are deliberately 4-digit roundings: stable, quotable values
# for demonstrations; a user config can supply full-precision overrides.
_BUILTIN_MASSES = {
    "electron": 9.109e-31,
    "proton": 1.673e-27,
    "pen": 1.0e-2,  # stand-in for a macroscopic everyday object
}


class UnknownParticleError(ValueError):
    """Raised on lookup of a name absent from the registry."""

    def __init__(self, name: str, known: tuple[str, ...]):
        super().__init__(f"unknown particle {name!r}; available: {', '.join(known)}")
        self.name = name
        self.known = known


class ParticleRegistry:
    """Immutable name -> Particle mapping, fixed at construction time."""

    def __init__(self, masses: Mapping[str, float]):
        self._particles = {str(name): Particle(str(name), float(mass)) for name, mass in masses.items()}

    def lookup(self, name: str) -> Particle:
        try:
            return self._particles[name]
        except KeyError:
            raise UnknownParticleError(name, self.names()) from None

    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self._particles))

    def extended(self, extra: Mapping[str, float]) -> "ParticleRegistry":
        merged = {name: p.mass for name, p in self._particles.items()}
        merged.update(extra)
        return ParticleRegistry(merged)

    def __contains__(self, name: str) -> bool:
        return name in self._particles

    def __iter__(self) -> Iterator[Particle]:
        return iter(self._particles[name] for name in self.names())

    def __len__(self) -> int:
        return len(self._particles)


BUILTIN_REGISTRY = ParticleRegistry(_BUILTIN_MASSES)


def lookup_particle(name: str, registry: ParticleRegistry | None = None) -> Particle:
    return (registry if registry is not None else BUILTIN_REGISTRY).lookup(name)


def load_particle_config(path: str | Path) -> ParticleRegistry:
    """Builtin registry extended by a JSON file of {name: mass_kg} entries."""
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, dict):
        raise ValueError(f"particle config {path} must be a JSON object of name -> mass")
    for name, mass in raw.items():
        if not isinstance(mass, (int, float)) or isinstance(mass, bool):
            raise ValueError(f"particle config entry {name!r} must map to a number, got {mass!r}")
    return BUILTIN_REGISTRY.extended({k: float(v) for k, v in raw.items()})

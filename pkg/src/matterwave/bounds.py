"""Relativistic localization bounds: Compton floor, hydrogen chain, collapse floor.

The asymptotic dispersion speed hbar/(m*width0) exceeds c exactly when the
packet is launched narrower than hbar/(m*c), so that length - the reduced
Compton wavelength - is the minimum admissible localization width for a
mass-m packet.  For the electron (bundled registry mass) it evaluates to
about 3.9e-13 m; note this is sometimes misquoted as ~1e-11 m by an
exponent slip, and the computed value is authoritative here.

The hydrogen chain compares the n-th Bohr radius with the electron's
Compton length: their ratio is n^2/alpha independent of the electron mass,
so a level forms exactly when alpha/n^2 < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import SI, Particle, PhysicalConstants, lookup_particle


@dataclass(frozen=True)
class BoundReport:
    particle: Particle
    compton: float                  # hbar/(m c)
    requested_width: float
    admissible: bool                # strictly wider than the Compton floor
    implied_asymptotic_speed: float  # hbar/(m * requested_width)


@dataclass(frozen=True)
class HydrogenReport:
    n: int
    bohr_radius_n: float
    compton_electron: float
    alpha: float
    forms: bool  # alpha/n^2 < 1


def compton_wavelength(particle: Particle, constants: PhysicalConstants = SI) -> float:
    """Reduced Compton wavelength hbar/(m c): the localization floor."""
    return constants.hbar / (particle.mass * constants.c)


def check_localization(particle: Particle, width: float, constants: PhysicalConstants = SI) -> BoundReport:
    """Is a packet of the requested width admissible for this particle?

    Admissible means strictly wider than the Compton floor, equivalently an
    implied asymptotic dispersion speed below c; the boundary width itself
    (speed exactly c) is inadmissible.
    """
    if not (width > 0.0 and math.isfinite(width)):
        raise ValueError(f"width must be finite and > 0, got {width!r}")
    compton = compton_wavelength(particle, constants)
    return BoundReport(
        particle=particle,
        compton=compton,
        requested_width=width,
        admissible=width > compton,
        implied_asymptotic_speed=constants.hbar / (particle.mass * width),
    )


def fine_structure_constant(constants: PhysicalConstants = SI) -> float:
    return constants.e_charge**2 / (4.0 * math.pi * constants.epsilon0 * constants.hbar * constants.c)


def bohr_radius(n: int, electron_mass: float, constants: PhysicalConstants = SI) -> float:
    return n**2 * 4.0 * math.pi * constants.epsilon0 * constants.hbar**2 / (electron_mass * constants.e_charge**2)


def hydrogen_report(
    n: int, constants: PhysicalConstants = SI, electron: Particle | None = None
) -> HydrogenReport:
    """Bohr-radius vs Compton-length comparison for principal number n."""
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n}")
    if electron is None:
        electron = lookup_particle("electron")
    alpha = fine_structure_constant(constants)
    return HydrogenReport(
        n=n,
        bohr_radius_n=bohr_radius(n, electron.mass, constants),
        compton_electron=compton_wavelength(electron, constants),
        alpha=alpha,
        forms=alpha / n**2 < 1.0,
    )


def black_hole_floor(mass: float, constants: PhysicalConstants = SI) -> float:
    """Smallest size a mass can collapse to: hbar/(m c), same as the Compton floor.

    Kept as a named operation because the collapse claim is distinct from the
    wave-packet localization claim, even though the formula coincides.
    """
    if not (mass > 0.0 and math.isfinite(mass)):
        raise ValueError(f"mass must be finite and > 0, got {mass!r}")
    return constants.hbar / (mass * constants.c)

#!/usr/bin/env python3
"""Localization-bound summary: Compton floors, dispersion speeds, hydrogen chain.

Prints a human-readable table for the bundled particles (floor width, implied
dispersion speed at that floor, collapse floor for heavier masses) and the
alpha-controlled hydrogen levels.
"""

import argparse

from matterwave.constants import BUILTIN_REGISTRY, SI
from matterwave import bounds
from matterwave import wavepacket as wp


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--levels", type=int, default=3, help="hydrogen levels to report")
    args = parser.parse_args()

    print(f"{'particle':<10} {'mass kg':>12} {'compton m':>12} {'v at floor / c':>15}")
    for particle in BUILTIN_REGISTRY:
        floor = bounds.compton_wavelength(particle)
        speed = wp.asymptotic_dispersion_speed(wp.GaussianPacket(particle, floor), SI)
        print(f"{particle.name:<10} {particle.mass:>12.3e} {floor:>12.3e} {speed / SI.c:>15.6f}")

    print()
    alpha = bounds.fine_structure_constant()
    print(f"fine-structure constant alpha = {alpha:.9f} (1/alpha = {1 / alpha:.3f})")
    for n in range(1, args.levels + 1):
        rep = bounds.hydrogen_report(n)
        print(f"  n={n}: bohr radius {rep.bohr_radius_n:.4e} m = "
              f"{rep.bohr_radius_n / rep.compton_electron:>10.1f} compton lengths, "
              f"forms: {rep.forms}")

    print()
    for mass, label in [(2e30, "solar-mass black hole"), (1e12, "mountain"), (1.0, "kilogram")]:
        print(f"collapse floor for {label:<22} ({mass:.0e} kg): {bounds.black_hole_floor(mass):.3e} m")


if __name__ == "__main__":
    main()

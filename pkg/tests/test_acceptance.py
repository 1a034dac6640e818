"""Acceptance suite: the package's quantitative exit criteria.

One test per criterion, each printing a single PASS/FAIL line with the
measured numbers (visible with -s, or in captured output on failure).

Criterion 9 is asserted at its pinned bound and is expected to FAIL: that
relative-growth bound contradicts the closed-form width law that the rest
of this suite validates.  The numbers are in that test's docstring; the
qualitative claim it was meant to pin (macroscopically invisible spreading
of a heavy object) is demonstrated alongside it.
"""

import itertools
import math
import time

import numpy as np
import pytest

from matterwave.constants import NATURAL, SI, Particle, lookup_particle
from matterwave import boxstates, bounds, wavepacket as wp
from matterwave.interferometer import DetectorStats, ExperimentConfig, run_experiment, sample_clicks

UNIT = Particle("unit", 1.0)


def report(number: int, name: str, ok: bool, detail: str) -> bool:
    print(f"criterion {number:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    return ok


def test_criterion_01_interferometer_baseline():
    no_h2 = run_experiment(ExperimentConfig(h2_present=False))
    bright = run_experiment(ExperimentConfig(h2_present=True, phase_upper=0.0))
    flipped = run_experiment(ExperimentConfig(h2_present=True, phase_upper=math.pi))
    deviations = (
        abs(no_h2.p_d1 - 0.5), abs(no_h2.p_d2 - 0.5),
        abs(bright.p_d1 - 1.0), abs(bright.p_d2 - 0.0),
        abs(flipped.p_d1 - 0.0), abs(flipped.p_d2 - 1.0),
    )
    ok = max(deviations) <= 1e-12
    assert report(1, "interferometer-baseline", ok, f"max deviation {max(deviations):.2e}")


def test_criterion_02_delayed_insertion_invariance():
    started = time.perf_counter()
    arrival = 1.0
    baseline = run_experiment(ExperimentConfig(h2_present=True, h2_insertion_time=0.0))
    identical = all(
        run_experiment(ExperimentConfig(h2_present=True, h2_insertion_time=frac * arrival,
                                        photon_arrival_time=arrival)).p_d1 == baseline.p_d1
        for frac in np.linspace(0.0, 0.999999, 50)
    )
    removed = run_experiment(ExperimentConfig(h2_present=False))
    late = run_experiment(ExperimentConfig(h2_present=True, h2_insertion_time=arrival,
                                           photon_arrival_time=arrival))
    restored = abs(removed.p_d1 - 0.5) <= 1e-12 and abs(late.p_d1 - 0.5) <= 1e-12
    elapsed = time.perf_counter() - started
    ok = identical and restored and elapsed < 1.0
    assert report(2, "delayed-insertion-invariance", ok,
                  f"bit-identical={identical} restored-50/50={restored} runtime={elapsed:.3f}s")


def test_criterion_03_monte_carlo_consistency():
    n = 100_000
    band = 474
    stats = DetectorStats(p_d1=0.5, p_d2=0.5)
    worst = max(abs(sample_clicks(stats, n, seed).clicks_d1 - n // 2) for seed in range(10))

    enumeration_ok = True
    for small_n in range(1, 11):
        pmf: dict[int, float] = {}
        for bits in itertools.product((0, 1), repeat=small_n):
            k = sum(bits)
            pmf[k] = pmf.get(k, 0.0) + 0.5**small_n
        mean = sum(k * q for k, q in pmf.items())
        var = sum((k - mean) ** 2 * q for k, q in pmf.items())
        enumeration_ok &= abs(mean - small_n * 0.5) <= 1e-12
        enumeration_ok &= abs(var - small_n * 0.25) <= 1e-12

    ok = worst <= band and enumeration_ok
    assert report(3, "monte-carlo-consistency", ok,
                  f"worst |clicks-50000| = {worst} (band {band}); enumeration moments exact={enumeration_ok}")


@pytest.fixture(scope="module")
def acceptance_grid():
    packet = wp.GaussianPacket(UNIT, 1.0)
    half = 8.0 * wp.analytic_width(packet, 4.0, NATURAL)
    return wp.GridSpec(-half, half, 2**14)


ACCEPTANCE_TIMES = (0.25, 0.5, 1.0, 2.0, 4.0)


def test_criterion_04_three_route_agreement(acceptance_grid):
    started = time.perf_counter()
    packet = wp.GaussianPacket(UNIT, 1.0)
    worst_spectral = worst_kernel = worst_pointwise = 0.0
    for t in ACCEPTANCE_TIMES:
        reference = wp.analytic_width(packet, t, NATURAL)
        spectral = wp.evolve_spectral(packet, t, acceptance_grid, NATURAL)
        kernel = wp.evolve_kernel(packet, t, acceptance_grid, NATURAL)
        worst_spectral = max(worst_spectral, abs(wp.measured_width(spectral) - reference) / reference)
        worst_kernel = max(worst_kernel, abs(wp.measured_width(kernel) - reference) / reference)
        worst_pointwise = max(worst_pointwise, float(np.max(np.abs(kernel.amplitudes - spectral.amplitudes))))
    elapsed = time.perf_counter() - started
    ok = worst_spectral <= 1e-3 and worst_kernel <= 5e-3 and worst_pointwise <= 1e-4 and elapsed < 10.0
    assert report(4, "three-route-agreement", ok,
                  f"spectral {worst_spectral:.2e} (<=1e-3), kernel {worst_kernel:.2e} (<=5e-3), "
                  f"pointwise {worst_pointwise:.2e} (<=1e-4), runtime {elapsed:.2f}s")


def test_criterion_05_norm_conservation(acceptance_grid):
    packet = wp.GaussianPacket(UNIT, 1.0)
    spectral_drift = max(
        abs(wp.evolve_spectral(packet, t, acceptance_grid, NATURAL).norm() - 1.0)
        for t in ACCEPTANCE_TIMES
    )
    kernel_drift = max(
        abs(wp.evolve_kernel(packet, t, acceptance_grid, NATURAL).norm() - 1.0)
        for t in ACCEPTANCE_TIMES
    )
    ok = spectral_drift <= 1e-9 and kernel_drift <= 1e-6
    assert report(5, "norm-conservation", ok,
                  f"spectral drift {spectral_drift:.2e} (<=1e-9), kernel drift {kernel_drift:.2e} (<=1e-6)")


def test_criterion_06_dispersion_speed_limits():
    packet = wp.GaussianPacket(UNIT, 1.0)
    v_small = wp.dispersion_speed(packet, 1e-6, NATURAL)
    v_large = wp.dispersion_speed(packet, 100.0, NATURAL)  # dispersion parameter 100
    asymptote = wp.asymptotic_dispersion_speed(packet, NATURAL)
    ok = v_small < 1e-5 and abs(v_large / asymptote - 1.0) <= 0.01
    assert report(6, "dispersion-speed-limits", ok,
                  f"v(dt=1e-6)={v_small:.2e} (<1e-5), asymptote ratio dev "
                  f"{abs(v_large / asymptote - 1.0):.4f} (<=0.01)")


def test_criterion_07_compton_boundary():
    electron = lookup_particle("electron")
    compton = bounds.compton_wavelength(electron)
    speed = wp.asymptotic_dispersion_speed(wp.GaussianPacket(electron, compton), SI)
    speed_ok = abs(speed - SI.c) <= 1e-9 * SI.c
    inadmissible_below = all(
        not bounds.check_localization(electron, factor * compton).admissible
        for factor in (0.999999, 0.5, 0.1, 0.01)
    )
    boundary = not bounds.check_localization(electron, compton).admissible
    proton_exponent = math.floor(math.log10(bounds.compton_wavelength(lookup_particle("proton"))))
    electron_exponent = math.floor(math.log10(compton))
    # computed value ~3.9e-13 m; the ~1e-11 m occasionally quoted is an
    # exponent slip and is intentionally NOT reproduced
    electron_ok = 3.8e-13 < compton < 3.95e-13 and electron_exponent == -13
    ok = speed_ok and inadmissible_below and boundary and proton_exponent in (-16, -15) and electron_ok
    assert report(7, "compton-boundary", ok,
                  f"speed/c-1={speed / SI.c - 1.0:.1e}, below-floor inadmissible={inadmissible_below}, "
                  f"proton exponent {proton_exponent}, electron {compton:.4e} m (exponent {electron_exponent})")


def test_criterion_08_hydrogen_chain():
    alpha = bounds.fine_structure_constant()
    ground = bounds.hydrogen_report(1)
    ratio = ground.bohr_radius_n / ground.compton_electron
    alpha_ok = abs(alpha - 7.297e-3) <= 1e-6
    ratio_ok = abs(ratio - 1.0 / alpha) <= 1e-6 / alpha
    forms_all = alpha < 1.0 and all(bounds.hydrogen_report(n).forms for n in range(1, 7))
    ok = alpha_ok and ratio_ok and forms_all
    assert report(8, "hydrogen-chain", ok,
                  f"alpha={alpha:.9f} (|d|<=1e-6), a1/compton={ratio:.6f} vs 1/alpha={1/alpha:.6f}, "
                  f"forms for n>=1: {forms_all}")


def test_criterion_09_pen_non_dispersion():
    """Asserted at the pinned bound; FAILS, and the failure is intended and documented.

    For mass 0.01 kg, width0 2.4e-12 m, t 3e9 s the closed-form width law
    gives hbar*t/(m*width0^2) = 5.49, so width(t)/width0 - 1 = 4.58: the
    stated relative bound 1e-10 is impossible by 11 orders of magnitude.
    What is true, and shown in the detail line, is that the *absolute*
    spread is ~1.1e-11 m over 95 years - invisible for a macroscopic
    object - with an asymptotic dispersion speed ~4.4e-21 m/s.
    """
    pen = lookup_particle("pen")
    packet = wp.GaussianPacket(pen, 2.4e-12)
    lifetime = 3e9
    ratio_minus_one = wp.analytic_width(packet, lifetime, SI) / packet.width0 - 1.0
    absolute_growth = wp.analytic_width(packet, lifetime, SI) - packet.width0
    ok = ratio_minus_one <= 1e-10
    assert report(9, "pen-non-dispersion", ok,
                  f"relative growth {ratio_minus_one:.3f} vs stated bound 1e-10; "
                  f"absolute growth {absolute_growth:.3e} m over {lifetime:.0e} s, "
                  f"v_disp_asym {wp.asymptotic_dispersion_speed(packet, SI):.3e} m/s"), (
        "stated bound is unattainable: the width law itself gives relative growth "
        f"{ratio_minus_one:.3f}; the macroscopic-invisibility claim holds in absolute terms "
        f"({absolute_growth:.3e} m over a lifetime)"
    )


def test_criterion_10_box_counting():
    started = time.perf_counter()
    box = boxstates.BoxSpec(1.0)
    h = SI.h

    cell = boxstates.MomentumRegion(p_lo=(0.0, 0.0, 0.0), p_hi=(h, h, h))
    single_ok = (boxstates.count_states_continuum(box, cell) == 1.0
                 and boxstates.count_states_lattice(box, cell) == 1)

    convergence_ok = True
    worst = 0.0
    for k in (5, 10, 20, 40):
        for extra in (0.0, 0.5):  # aligned span and half-cell-incommensurate span
            region = boxstates.MomentumRegion(
                p_lo=(0.37 * h,) * 3, p_hi=((0.37 + k + extra) * h,) * 3
            )
            ratio = (boxstates.count_states_lattice(box, region)
                     / boxstates.count_states_continuum(box, region))
            worst = max(worst, abs(ratio - 1.0) * k / 3.0)
            convergence_ok &= abs(ratio - 1.0) <= 3.0 / k

    spacing_ok = all(
        boxstates.min_momentum_uncertainty(boxstates.BoxSpec(side)) * side == h
        for side in (0.25, 0.5, 1.0, 2.0, 4.0)
    )
    elapsed = time.perf_counter() - started
    ok = single_ok and convergence_ok and spacing_ok and elapsed < 5.0
    assert report(10, "box-counting", ok,
                  f"single-cell exact={single_ok}, worst |ratio-1|/(3/k)={worst:.3f} (<=1), "
                  f"min-dp*L exact={spacing_ok}, runtime {elapsed:.2f}s")

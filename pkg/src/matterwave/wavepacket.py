"""Free 1-D Gaussian wave-packet dispersion by three independent routes.

Width convention
----------------
``width0`` is the amplitude-Gaussian scale a in psi(x, t0) ~ exp(-x^2/(2a^2)),
paired with a momentum-space amplitude a(k) = exp(-(k-k0)^2/(2 dk^2)) of
width dk = 1/width0.  In this convention m * width0 * dv0 = hbar holds
exactly for the velocity spread dv0 = hbar*dk/m (the packet is launched at
its minimum-uncertainty waist).  The rms of |psi|^2 equals a/sqrt(2), so
``measured_width`` multiplies the density rms by sqrt(2) to report widths in
the same convention as the closed form.

Evolution model
---------------
Nonrelativistic free dispersion, omega(k) = hbar k^2 / (2m).  The closed
form for the width is

    width(t) = width0 * sqrt(1 + (hbar*dt / (m*width0^2))^2),  dt = t - t0,

the quadrature sum of the initial width and the velocity-spread term
hbar*dt/(m*width0).  Two discrete routes recompute the same evolution
independently:

- ``evolve_spectral``: synthesize psi(x, t) from the momentum-space Gaussian
  on a uniform grid (FFT wavenumber layout), phase-evolved by omega(k).
- ``evolve_kernel``: midpoint-rule quadrature of the free propagator
  K(x, t; x', t0) = sqrt(m/(2 pi i hbar dt)) * exp(i m (x-x')^2/(2 hbar dt))
  against the sampled initial packet.  The Toeplitz convolution sum is
  evaluated with an FFT convolution, which reproduces the direct sum to
  rounding; validity requires the stationary-phase resolution rule
  sqrt(hbar*dt/m) >= 3*dx, otherwise the chirp is unresolvable on the grid.

Backward evolution (t < t0) is rejected everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.signal import fftconvolve

from .constants import SI, Particle, PhysicalConstants

#: Grid-sizing rule: keep the half-extent at least this many final widths.
HALF_EXTENT_WIDTHS = 8.0
#: Grid-sizing rule: resolve the initial width with at least this many points.
POINTS_PER_WIDTH0 = 16.0
#: Stationary-phase resolution rule for the kernel route.
KERNEL_RESOLUTION_FACTOR = 3.0


class GridTooSmallError(ValueError):
    """The requested time needs more room than the grid half-extent allows."""


class KernelResolutionError(ValueError):
    """The propagator chirp oscillates faster than the grid can resolve."""


@dataclass(frozen=True)
class GaussianPacket:
    particle: Particle
    width0: float        # amplitude-Gaussian width parameter (m)
    center_x: float = 0.0
    center_k: float = 0.0
    t0: float = 0.0

    def __post_init__(self) -> None:
        if not (self.width0 > 0.0 and math.isfinite(self.width0)):
            raise ValueError(f"width0 must be finite and > 0, got {self.width0!r}")

    @property
    def mass(self) -> float:
        return self.particle.mass

    @property
    def momentum_width(self) -> float:
        """dk = 1/width0 (see module docstring for the convention)."""
        return 1.0 / self.width0


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not self.x_max > self.x_min:
            raise ValueError("grid needs x_max > x_min")
        n = self.n_points
        if n < 16 or (n & (n - 1)) != 0:
            raise ValueError(f"n_points must be a power of two >= 16, got {n}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_points

    @property
    def half_extent(self) -> float:
        return 0.5 * (self.x_max - self.x_min)

    def positions(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n_points)

    def wavenumbers(self) -> np.ndarray:
        """Conjugate wavenumbers in FFT layout."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)


@dataclass(frozen=True, eq=False)
class SampledWaveFunction:
    grid: GridSpec
    amplitudes: np.ndarray  # complex, 1/sqrt(m) normalization
    time: float

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.grid.dx)

    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class WidthReport:
    t: float
    width_analytic: float
    width_spectral: float
    width_kernel: float | None
    v_disp: float
    v_disp_asymptotic: float


def _elapsed(packet: GaussianPacket, t: float) -> float:
    if t < packet.t0:
        raise ValueError(f"backward evolution rejected: t={t!r} < t0={packet.t0!r}")
    return t - packet.t0


def analytic_width(packet: GaussianPacket, t: float, constants: PhysicalConstants = SI) -> float:
    """Closed-form width of the freely dispersed packet at time t."""
    dt = _elapsed(packet, t)
    u = constants.hbar * dt / (packet.mass * packet.width0**2)
    return packet.width0 * math.sqrt(1.0 + u * u)


def velocity_spread_width(packet: GaussianPacket, t: float, constants: PhysicalConstants = SI) -> float:
    """Spread contributed by the initial velocity uncertainty alone."""
    dt = _elapsed(packet, t)
    return constants.hbar * dt / (packet.mass * packet.width0)


def build_momentum_packet(packet: GaussianPacket) -> Callable[[np.ndarray], np.ndarray]:
    """Unnormalized momentum-space amplitude a(k); peak value 1 at k0."""
    k0 = packet.center_k
    two_dk2 = 2.0 * packet.momentum_width**2

    def a(k: np.ndarray) -> np.ndarray:
        return np.exp(-((np.asarray(k, dtype=float) - k0) ** 2) / two_dk2)

    return a


def _check_grid_extent(packet: GaussianPacket, t: float, grid: GridSpec, constants: PhysicalConstants) -> None:
    needed = HALF_EXTENT_WIDTHS * analytic_width(packet, t, constants)
    if needed > grid.half_extent:
        raise GridTooSmallError(
            f"grid half-extent {grid.half_extent:.6g} < {HALF_EXTENT_WIDTHS:g} * width(t) = {needed:.6g}"
        )


def evolve_spectral(
    packet: GaussianPacket, t: float, grid: GridSpec, constants: PhysicalConstants = SI
) -> SampledWaveFunction:
    """Evolve by phase-advancing the momentum-space Gaussian and resynthesizing.

    The spectrum is normalized once, at t0, via Parseval; the evolution phase
    has unit modulus, so the position-space norm is conserved identically.
    """
    dt = _elapsed(packet, t)
    _check_grid_extent(packet, t, grid, constants)
    k = grid.wavenumbers()
    spectrum = build_momentum_packet(packet)(k).astype(complex)
    # Parseval a la discrete synthesis below: sum |psi_j|^2 dx = n * sum |A|^2 * dx
    norm0 = math.sqrt(grid.n_points * float(np.sum(np.abs(spectrum) ** 2)) * grid.dx)
    omega = constants.hbar * k**2 / (2.0 * packet.mass)
    spectrum *= np.exp(1j * (k * (grid.x_min - packet.center_x) - omega * dt))
    psi = (grid.n_points / norm0) * np.fft.ifft(spectrum)
    return SampledWaveFunction(grid=grid, amplitudes=psi, time=t)


def initial_wavefunction(packet: GaussianPacket, grid: GridSpec) -> SampledWaveFunction:
    """Sample the t0 packet on the grid, normalized to unit discrete norm."""
    x = grid.positions() - packet.center_x
    psi = np.exp(-(x**2) / (2.0 * packet.width0**2) + 1j * packet.center_k * x)
    psi /= math.sqrt(float(np.sum(np.abs(psi) ** 2)) * grid.dx)
    return SampledWaveFunction(grid=grid, amplitudes=psi, time=packet.t0)


def evolve_kernel(
    packet: GaussianPacket, t: float, grid: GridSpec, constants: PhysicalConstants = SI
) -> SampledWaveFunction:
    """Evolve by quadrature of the free propagator against the t0 packet.

    The midpoint-rule sum psi_j = sum_l K((j-l) dx) psi0_l dx runs over every
    grid pair, evaluated as an exact Toeplitz convolution.  The result is not
    renormalized: its norm drift is a quadrature-quality diagnostic.
    """
    dt = _elapsed(packet, t)
    if dt <= 0.0:
        raise ValueError("kernel route needs t strictly greater than t0")
    hbar, m = constants.hbar, packet.mass
    diffusion_scale = math.sqrt(hbar * dt / m)
    if diffusion_scale < KERNEL_RESOLUTION_FACTOR * grid.dx:
        raise KernelResolutionError(
            f"sqrt(hbar*dt/m) = {diffusion_scale:.6g} < "
            f"{KERNEL_RESOLUTION_FACTOR:g}*dx = {KERNEL_RESOLUTION_FACTOR * grid.dx:.6g}; "
            "the propagator chirp is unresolvable at this dt"
        )
    _check_grid_extent(packet, t, grid, constants)
    psi0 = initial_wavefunction(packet, grid).amplitudes
    n = grid.n_points
    offsets = grid.dx * np.arange(-(n - 1), n)
    kernel = np.sqrt(m / (2j * np.pi * hbar * dt)) * np.exp(1j * m * offsets**2 / (2.0 * hbar * dt))
    psi = fftconvolve(psi0, kernel, mode="full")[n - 1 : 2 * n - 1] * grid.dx
    return SampledWaveFunction(grid=grid, amplitudes=psi, time=t)


def measured_width(wf: SampledWaveFunction) -> float:
    """sqrt(2) * rms of |psi|^2: the amplitude-width parameter of the samples."""
    norm = wf.norm()
    if abs(norm - 1.0) > 1e-4:
        raise ValueError(f"wave function is not normalized: norm = {norm!r}")
    x = wf.grid.positions()
    density = wf.density() / norm
    dx = wf.grid.dx
    mean = float(np.sum(x * density) * dx)
    variance = float(np.sum((x - mean) ** 2 * density) * dx)
    return math.sqrt(2.0 * variance)


def dispersion_speed(packet: GaussianPacket, dt: float, constants: PhysicalConstants = SI) -> float:
    """Average speed at which the width has grown after dt."""
    if dt <= 0.0:
        raise ValueError(f"dt must be > 0, got {dt!r}")
    grown = analytic_width(packet, packet.t0 + dt, constants)
    return (grown - packet.width0) / dt


def asymptotic_dispersion_speed(packet: GaussianPacket, constants: PhysicalConstants = SI) -> float:
    """Large-dt limit of the dispersion speed: hbar/(m*width0)."""
    return constants.hbar / (packet.mass * packet.width0)


@dataclass(frozen=True)
class SpreadSample:
    """One row of the spreading-fan series (widths plus straight rays)."""

    t: float
    width_analytic: float
    width_spectral: float
    ray_positions: tuple[float, ...]  # index j = -rays..rays maps to x0 + j*spread/rays


def emit_spread_series(
    packet: GaussianPacket,
    t_samples: Sequence[float],
    rays: int,
    grid: GridSpec | None = None,
    constants: PhysicalConstants = SI,
) -> list[SpreadSample]:
    """Tabulate widths and the straight-ray fan x0 +- (j/rays)*spread(t).

    The rays are the uniform-velocity paths whose terminal spread matches the
    velocity-uncertainty envelope; 2*rays + 1 positions per sample.
    """
    if len(t_samples) == 0:
        raise ValueError("t_samples must not be empty")
    if rays < 1:
        raise ValueError("rays must be >= 1")
    samples = [float(t) for t in t_samples]
    if any(b < a for a, b in zip(samples, samples[1:])):
        raise ValueError("t_samples must be ascending")
    if samples[0] < packet.t0:
        raise ValueError("t_samples must start at or after t0")
    if grid is None:
        grid = grid_for(packet, samples[-1], constants)
    rows = []
    for t in samples:
        spread = velocity_spread_width(packet, t, constants)
        positions = tuple(packet.center_x + j * spread / rays for j in range(-rays, rays + 1))
        rows.append(
            SpreadSample(
                t=t,
                width_analytic=analytic_width(packet, t, constants),
                width_spectral=measured_width(evolve_spectral(packet, t, grid, constants)),
                ray_positions=positions,
            )
        )
    return rows


def grid_for(
    packet: GaussianPacket,
    t_max: float,
    constants: PhysicalConstants = SI,
    max_points: int = 2**20,
) -> GridSpec:
    """Smallest power-of-two grid satisfying the sizing rules up to t_max.

    Half-extent >= 8 * width(t_max) around the packet center's path, and
    dx <= width0/16.
    """
    half = HALF_EXTENT_WIDTHS * analytic_width(packet, t_max, constants)
    drift = constants.hbar * packet.center_k * (t_max - packet.t0) / packet.mass
    lo = min(packet.center_x, packet.center_x + drift) - half
    hi = max(packet.center_x, packet.center_x + drift) + half
    dx_max = packet.width0 / POINTS_PER_WIDTH0
    n = 16
    while (hi - lo) / n > dx_max:
        n *= 2
        if n > max_points:
            raise GridTooSmallError(
                f"grid would need more than {max_points} points to satisfy the sizing rules"
            )
    return GridSpec(x_min=lo, x_max=hi, n_points=n)


def width_report(
    packet: GaussianPacket,
    t: float,
    grid: GridSpec,
    constants: PhysicalConstants = SI,
    include_kernel: bool = False,
) -> WidthReport:
    """All width routes plus dispersion speeds at a single time.

    The kernel width is None at t == t0 (the propagator is singular there).
    """
    dt = _elapsed(packet, t)
    kernel_width = None
    if include_kernel and dt > 0.0:
        kernel_width = measured_width(evolve_kernel(packet, t, grid, constants))
    return WidthReport(
        t=t,
        width_analytic=analytic_width(packet, t, constants),
        width_spectral=measured_width(evolve_spectral(packet, t, grid, constants)),
        width_kernel=kernel_width,
        v_disp=dispersion_speed(packet, dt, constants) if dt > 0.0 else 0.0,
        v_disp_asymptotic=asymptotic_dispersion_speed(packet, constants),
    )

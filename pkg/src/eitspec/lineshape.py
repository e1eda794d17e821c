"""Absorption line shapes of control-dressed scattering resonances.

A line |g> -> |e> decaying into an unstructured continuum at rate gamma
absorbs a weak probe with a Lorentzian profile of FWHM gamma.  Dressing
|e> with a control field splits the resonance into two interfering
components; their continuum-mediated interaction is encoded in the
effective 2x2 Hamiltonian

    H(E) = [[ E - E_e - delta/2 - lambda_1 - i gamma/2 ,  -i gamma/2 ],
            [ -i gamma/2 ,  E - E_e - delta/2 - lambda_2 - i gamma/2 ]]

whose inverse D = H^-1, weighted by the dressed amplitudes alpha_j,
gives the probe transition dipole

    mu(E) = sqrt(gamma/pi) { a1^2 D11 + a1 a2 (D12 + D21) + a2^2 D22 }.

For an exactly resonant control (delta = 0) the closed form

    mu(E) = (E - E_e) / ( [E - E_e - i gamma/4]^2 + gamma^2/16 - Omega^2 )

is used instead.  Both vanish at E = E_e: the transparency hole.  Note
the two routes carry different damping in their denominators (gamma
versus gamma/2); hole position, symmetry and peak locations agree, the
widths differ.  Each is implemented as stated and the tests bound the
disagreement.

Profiles are normalised per line: all constant prefactors
(2 pi |eps_pr|^2 |mu_es V|^2) are folded into the line's `strength`, so an
uncontrolled profile peaks at exactly `strength`.  Overlapping lines add
incoherently (they start from distinct initial states or molecules), so a
spectrum is the plain sum of per-line profiles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

from .dressed import ControlField, DressedSystem, dress
from .errors import AmbiguousControlError, SingularMatrixError
from .units import Wavenumber

# |det| floor below which a 2x2 inversion is refused.
DET_FLOOR = 1e-300


@dataclass(frozen=True)
class SpectralLine:
    """One |g> -> |e> transition.

    omega_ge is the bare transition frequency (the resonance position on
    the probe axis), gamma the decay width (FWHM of the bare profile),
    strength the relative peak weight.
    """

    omega_ge: Wavenumber
    gamma: Wavenumber
    strength: float = 1.0
    species: str = ""
    branch: str = ""

    def __post_init__(self):
        if not (self.gamma > 0.0):
            raise ValueError(f"line width must be > 0, got {self.gamma}")
        if self.strength < 0.0:
            raise ValueError(f"line strength must be >= 0, got {self.strength}")

    @property
    def label(self) -> str:
        return f"{self.species} {self.branch}".strip()


@dataclass
class ComplexMatrix2:
    """2x2 complex matrix; entries may be scalars or equal-shape arrays."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __matmul__(self, other: "ComplexMatrix2") -> "ComplexMatrix2":
        return ComplexMatrix2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def trace(self):
        return self.m11 + self.m22

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21


def effective_hamiltonian(
    energy, line: SpectralLine, ds: DressedSystem
) -> ComplexMatrix2:
    """Continuum-mediated coupling matrix H(E) of the two dressed states.

    `energy` may be a scalar or an ndarray; entries broadcast accordingly.
    """
    half_width = 0.5j * line.gamma
    base = energy - line.omega_ge - ds.delta / 2.0 - half_width
    return ComplexMatrix2(
        base - ds.lam[0],
        -half_width,
        -half_width,
        base - ds.lam[1],
    )


def invert_2x2(m: ComplexMatrix2) -> ComplexMatrix2:
    """Invert a 2x2 complex matrix via the adjugate.

    Raises SingularMatrixError when any |det| falls below DET_FLOOR.
    """
    det = m.det()
    if np.any(np.abs(det) < DET_FLOOR):
        raise SingularMatrixError("2x2 matrix is singular to working precision")
    return ComplexMatrix2(m.m22 / det, -m.m12 / det, -m.m21 / det, m.m11 / det)


def _dressed_bracket(energy, line: SpectralLine, ds: DressedSystem):
    # D = H^-1 weighted by the dressed s-state amplitudes.
    d = invert_2x2(effective_hamiltonian(energy, line, ds))
    a1, a2 = ds.alpha
    return a1 * a1 * d.m11 + a1 * a2 * (d.m12 + d.m21) + a2 * a2 * d.m22


def transition_dipole(energy, line: SpectralLine, ds: DressedSystem):
    """Probe transition dipole for a detuned control (general route).

    Continuum coupling is the unstructured-continuum constant
    sqrt(gamma/pi); remaining prefactors live in the line strength.
    """
    return math.sqrt(line.gamma / math.pi) * _dressed_bracket(energy, line, ds)


def transition_dipole_resonant(energy, line: SpectralLine, rabi: Wavenumber):
    """Probe transition dipole for an exactly resonant control (delta = 0).

    At rabi = 0 the expression factors to 1/(E - E_e - i gamma/2), which is
    used directly: it is exact and avoids the removable 0/0 at E = E_e.
    """
    x = energy - line.omega_ge
    if rabi == 0.0:
        return 1.0 / (x - 0.5j * line.gamma)
    den = (x - 0.25j * line.gamma) ** 2 + line.gamma**2 / 16.0 - rabi * rabi
    return x / den


def absorption_probability(probe_amp: float, mu) -> float:
    """First-order absorption probability 2 pi |probe_amp * mu|^2."""
    return 2.0 * math.pi * np.abs(probe_amp * mu) ** 2


def _lorentzian(x, gamma: float):
    q = gamma * gamma / 4.0
    return q / (x * x + q)


def line_profile(
    line: SpectralLine,
    control: ControlField | None,
    energies: np.ndarray,
) -> np.ndarray:
    """Absorption profile of one line on the given energy grid.

    Without a control (or with zero coupling) this is a Lorentzian of FWHM
    gamma peaking at `strength`.  An exactly resonant control takes the
    closed-form route, a detuned one the general route; both carry the
    same strength normalisation.
    """
    energies = _checked_grid(energies)
    x = energies - line.omega_ge
    scale = line.strength * line.gamma * line.gamma / 4.0
    if control is None or control.rabi == 0.0:
        return line.strength * _lorentzian(x, line.gamma)
    if control.detuning == 0.0:
        mu = transition_dipole_resonant(energies, line, control.rabi)
        return scale * np.abs(mu) ** 2
    bracket = _dressed_bracket(energies, line, dress(control))
    return scale * np.abs(bracket) ** 2


@dataclass(eq=False)
class SpectrumGrid:
    """An energy axis with per-line and total absorption values."""

    energies: np.ndarray
    per_line: dict[str, np.ndarray]
    total: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        self.energies = _checked_grid(self.energies)
        for label, values in self.per_line.items():
            if values.shape != self.energies.shape:
                raise ValueError(f"profile {label!r} does not match the grid")
            if np.any(values < 0.0):
                raise ValueError(f"profile {label!r} has negative absorption")
        expected = _sum_profiles(self.per_line.values(), self.energies.size)
        if self.total is None:
            self.total = expected
        elif not np.array_equal(self.total, expected):
            raise ValueError("total is not the sum of the per-line profiles")


def _checked_grid(energies) -> np.ndarray:
    energies = np.asarray(energies, dtype=float)
    if energies.ndim != 1 or energies.size == 0:
        raise ValueError("energy grid must be a nonempty 1-d sequence")
    if energies.size > 1 and not np.all(np.diff(energies) > 0.0):
        raise ValueError("energy grid must be strictly increasing")
    return energies


def _sum_profiles(profiles: Iterable[np.ndarray], npts: int) -> np.ndarray:
    # Fixed left-to-right accumulation keeps totals bit-identical.
    return reduce(np.add, profiles, np.zeros(npts))


def synthesize_spectrum(
    lines: Sequence[SpectralLine],
    controls: Sequence[tuple[str, ControlField]],
    energies: np.ndarray,
    probe_amp: float = 1.0,
) -> SpectrumGrid:
    """Per-line profiles plus their incoherent sum.

    `controls` pairs a line label with the control field acting on that
    line's e-s transition; each controlled line sees its own detuning.
    A label matched by more than one control raises, as does a control
    whose label matches no line.
    """
    energies = _checked_grid(energies)
    labels = [line.label for line in lines]
    if len(set(labels)) != len(labels):
        raise ValueError("line labels must be unique within a spectrum")
    matched: Mapping[str, ControlField] = {}
    for selector, control in controls:
        if selector in matched:
            raise AmbiguousControlError(
                f"line {selector!r} is matched by more than one control"
            )
        if selector not in labels:
            raise ValueError(f"control selector {selector!r} matches no line")
        matched[selector] = control
    weight = probe_amp * probe_amp
    per_line: dict[str, np.ndarray] = {}
    for line in lines:
        profile = line_profile(line, matched.get(line.label), energies)
        per_line[line.label] = weight * profile
    total = _sum_profiles(per_line.values(), energies.size)
    return SpectrumGrid(energies=energies, per_line=per_line, total=total)


def make_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Deterministic grid start, start+step, ... up to stop (inclusive
    when it lands on a step within rounding slack)."""
    if not (step > 0.0) or not (stop > start):
        raise ValueError("grid needs stop > start and step > 0")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def default_grid(
    lines: Sequence[SpectralLine],
    pad_widths: float = 10.0,
    points_per_width: int = 50,
) -> np.ndarray:
    """Grid covering all lines with a pad of `pad_widths` times the widest
    gamma and a step of the narrowest gamma over `points_per_width`."""
    if not lines:
        raise ValueError("cannot build a default grid without lines")
    lo = min(line.omega_ge for line in lines)
    hi = max(line.omega_ge for line in lines)
    gamma_max = max(line.gamma for line in lines)
    gamma_min = min(line.gamma for line in lines)
    step = gamma_min / points_per_width
    return make_grid(lo - pad_widths * gamma_max, hi + pad_widths * gamma_max, step)

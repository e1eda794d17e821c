"""Spectroscopic unit conversions and control-field strength relations.

Every frequency, energy, width and Rabi coupling inside this package is a
wavenumber in cm^-1; conversion to laboratory units (GHz, W/cm^2) happens
only at the I/O boundary, which is what this module provides.

Conventions
-----------
* a wavenumber x corresponds to the ordinary frequency nu = c x and to the
  angular frequency omega = 2 pi c x;
* the Rabi coupling of a field of amplitude eps driving a transition with
  dipole moment mu is Omega = mu eps / hbar (an angular frequency);
* the intensity of a linearly polarised field of amplitude eps is the cycle
  average I = (1/2) eps0 c eps^2.

Physical constants are pinned (CODATA 2018) so conversions are bit-stable
across library versions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidDipoleError

# A wavenumber in cm^-1, the package-wide energy/frequency unit.
Wavenumber = float

SPEED_OF_LIGHT = 299792458.0        # m/s, exact
HBAR = 1.054571817e-34              # J s, CODATA 2018
EPSILON_0 = 8.8541878128e-12        # F/m, CODATA 2018
DEBYE = 1e-21 / SPEED_OF_LIGHT      # C m

# 1 cm^-1 in GHz: c in cm/s divided by 1e9.
CM1_TO_GHZ = 29.9792458


def wavenumber_to_frequency(x: Wavenumber) -> float:
    """Convert a wavenumber in cm^-1 to an ordinary frequency in GHz."""
    return x * CM1_TO_GHZ


def wavenumber_to_angular_frequency(x: Wavenumber) -> float:
    """Convert a wavenumber in cm^-1 to an angular frequency in rad/s."""
    return 2.0 * math.pi * x * (SPEED_OF_LIGHT * 100.0)


def rabi_to_field(rabi: Wavenumber, dipole_moment: float) -> float:
    """Electric-field amplitude (V/m) that yields `rabi` on a transition
    with the given dipole moment (Debye).
    """
    if dipole_moment <= 0.0:
        raise InvalidDipoleError(
            f"dipole moment must be > 0 Debye, got {dipole_moment}"
        )
    omega = wavenumber_to_angular_frequency(rabi)
    return HBAR * omega / (dipole_moment * DEBYE)


def rabi_to_intensity(rabi: Wavenumber, dipole_moment: float) -> float:
    """Control intensity in W/cm^2 required for a Rabi coupling `rabi`
    (cm^-1) on a transition with dipole moment `dipole_moment` (Debye).
    """
    eps = rabi_to_field(rabi, dipole_moment)
    intensity_si = 0.5 * EPSILON_0 * SPEED_OF_LIGHT * eps * eps  # W/m^2
    return intensity_si / 1e4


def intensity_to_rabi(intensity: float, dipole_moment: float) -> Wavenumber:
    """Inverse of :func:`rabi_to_intensity`; `intensity` in W/cm^2."""
    if dipole_moment <= 0.0:
        raise InvalidDipoleError(
            f"dipole moment must be > 0 Debye, got {dipole_moment}"
        )
    if intensity < 0.0:
        raise ValueError(f"intensity must be >= 0, got {intensity}")
    eps = math.sqrt(2.0 * intensity * 1e4 / (EPSILON_0 * SPEED_OF_LIGHT))
    omega = dipole_moment * DEBYE * eps / HBAR
    return omega / (2.0 * math.pi * SPEED_OF_LIGHT * 100.0)


@dataclass(frozen=True)
class FieldSpec:
    """A consistent (dipole moment, Rabi coupling, intensity) triple.

    dipole_moment is in Debye, rabi_frequency in cm^-1, intensity in
    W/cm^2. Use the constructors to fill in the dependent quantity.
    """

    dipole_moment: float
    rabi_frequency: Wavenumber
    intensity: float

    def __post_init__(self):
        if self.dipole_moment < 0 or self.rabi_frequency < 0 or self.intensity < 0:
            raise ValueError("FieldSpec fields must be nonnegative")
        if self.dipole_moment > 0 and (
            (self.rabi_frequency == 0.0) != (self.intensity == 0.0)
        ):
            raise ValueError(
                "zero Rabi frequency and zero intensity must occur together"
            )

    @classmethod
    def from_rabi(cls, dipole_moment: float, rabi: Wavenumber) -> "FieldSpec":
        return cls(dipole_moment, rabi, rabi_to_intensity(rabi, dipole_moment))

    @classmethod
    def from_intensity(cls, dipole_moment: float, intensity: float) -> "FieldSpec":
        return cls(
            dipole_moment, intensity_to_rabi(intensity, dipole_moment), intensity
        )

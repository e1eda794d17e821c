"""Autler-Townes dressed eigensystem of the control-driven {|e>, |s>} block.

In the rotating frame the control field of Rabi coupling Omega and
detuning delta = omega_c - (E_e - E_s) turns the excited/auxiliary pair
into two dressed states with eigenvalues

    lambda_1 = +W,  lambda_2 = -W,  W = sqrt(delta^2/4 + Omega^2),

and amplitudes (alpha_j on |s>, beta_j on |e>)

    alpha_j = sqrt( Omega^2 / (2 W^2 - s_j delta W) ),   s_j = 3 - 2 j,
    beta_j  = alpha_j (W - s_j delta/2) / Omega.

The amplitudes satisfy |alpha_j|^2 + |beta_j|^2 = 1 identically.  A phase
on Omega would only rotate beta_j globally and cancels in every modulus
squared downstream, so Omega is taken real and nonnegative here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateCouplingError
from .units import Wavenumber


@dataclass(frozen=True)
class ControlField:
    """Control laser acting on one e-s transition.

    omega_c is the control centre frequency, rabi the coupling Omega >= 0,
    omega_es the bare e-s transition frequency; all in cm^-1.
    """

    omega_c: Wavenumber
    rabi: Wavenumber
    omega_es: Wavenumber

    def __post_init__(self):
        if not (self.rabi >= 0.0):
            raise ValueError(f"Rabi coupling must be >= 0, got {self.rabi}")
        if not math.isfinite(self.omega_c - self.omega_es):
            raise ValueError("control detuning must be finite")

    @property
    def detuning(self) -> Wavenumber:
        return self.omega_c - self.omega_es


@dataclass(frozen=True)
class DressedSystem:
    """Dressed quantities for one (line, control) pair."""

    delta: Wavenumber
    omega_prime: Wavenumber
    lam: tuple[float, float]
    alpha: tuple[float, float]
    beta: tuple[float, float]


def generalized_rabi(delta: Wavenumber, rabi: Wavenumber) -> Wavenumber:
    """W = sqrt(delta^2/4 + rabi^2), half the Autler-Townes splitting."""
    return math.sqrt(delta * delta / 4.0 + rabi * rabi)


def at_eigenvalues(delta: Wavenumber, rabi: Wavenumber) -> tuple[float, float]:
    """Dressed eigenvalues (lambda_1, lambda_2) = (+W, -W)."""
    w = generalized_rabi(delta, rabi)
    return w, -w


def dressed_coefficients(
    delta: Wavenumber, rabi: Wavenumber
) -> tuple[float, float, float, float]:
    """Amplitudes (alpha_1, beta_1, alpha_2, beta_2) of the dressed states.

    Raises DegenerateCouplingError at rabi <= 0, where the expressions are
     0/0; callers must use the uncontrolled path there.

    Evaluation uses the algebraically equivalent forms

        alpha_j^2 = (2 W + s_j delta) / (4 W)
        (W - s_j delta/2) = rabi^2 / (W + s_j delta/2)

    on the branch where the direct expression would cancel, so the
    normalisation |alpha_j|^2 + |beta_j|^2 = 1 survives extreme
    delta/rabi ratios.
    """
    if rabi <= 0.0:
        raise DegenerateCouplingError(
            f"dressed amplitudes need rabi > 0, got {rabi}"
        )
    w = generalized_rabi(delta, rabi)
    out = []
    for s in (1.0, -1.0):
        sd = s * delta
        if sd >= 0.0:
            asq = (2.0 * w + sd) / (4.0 * w)
        else:
            asq = rabi * rabi / (w * (2.0 * w - sd))
        a = math.sqrt(asq)
        if sd > 0.0:
            prefactor = rabi / (w + sd / 2.0)
        else:
            prefactor = (w - sd / 2.0) / rabi
        out.extend((a, a * prefactor))
    return out[0], out[1], out[2], out[3]


def dress(control: ControlField) -> DressedSystem:
    """Build the full dressed system for one control field."""
    delta = control.detuning
    lam = at_eigenvalues(delta, control.rabi)
    a1, b1, a2, b2 = dressed_coefficients(delta, control.rabi)
    return DressedSystem(
        delta=delta,
        omega_prime=lam[0],
        lam=lam,
        alpha=(a1, a2),
        beta=(b1, b2),
    )

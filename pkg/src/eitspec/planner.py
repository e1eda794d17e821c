"""Predict what a proposed control field does to every line in a catalog.

A line whose e-s transition is within one linewidth of the control is the
targeted species: its absorption is removed (the transparency hole sits on
it).  Every other line is a spectator whose upper level is pushed by the
off-resonant dressing.  The dressed doublet of a spectator with detuning
delta' and coupling rabi' is estimated perturbatively as

    E_AT(+/-) = E_e' + [ delta'/2 +/- (delta'/2 + 2 rabi'^2 / delta') ]

so the near branch is displaced by -2 rabi'^2 / delta' (valid for
delta' >> rabi').  The exact dressed positions E_e' + delta'/2 +/- W are
exposed alongside for comparison; the perturbative coefficient is twice
the leading term of the exact displacement, and the tests bound the two
against each other.

A spectator counts as untouched only when delta'/gamma clears a
configurable threshold (default 10) and the predicted near-branch shift
stays below gamma/10.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .catalog import LineCatalog, format_float
from .dressed import ControlField, generalized_rabi
from .errors import ResonantInputError
from .lineshape import SpectralLine
from .units import Wavenumber

ROLE_RESONANT = "A-resonant"
ROLE_SPECTATOR = "B-spectator"

VERDICT_ELIMINATED = "eliminated"
VERDICT_SHIFTED = "shifted"
VERDICT_UNTOUCHED = "untouched"
VERDICT_VIOLATES = "violates-criterion"

DEFAULT_THRESHOLD = 10.0

REPORT_COLUMNS = (
    "label",
    "role",
    "delta_prime_cm1",
    "rabi_cm1",
    "shift_near_cm1",
    "shift_far_cm1",
    "ratio",
    "verdict",
)


def at_shift_estimate(
    e_e_prime: Wavenumber, delta_prime: Wavenumber, rabi_prime: Wavenumber
) -> tuple[Wavenumber, Wavenumber]:
    """Perturbative dressed-doublet positions (far branch, near branch).

    Diverges at delta_prime = 0, which is rejected: a resonant line is a
    target, not a spectator.
    """
    if delta_prime == 0.0:
        raise ResonantInputError(
            "shift estimate needs a nonzero detuning; a resonant line is "
            "eliminated, not shifted"
        )
    pull = 2.0 * rabi_prime * rabi_prime / delta_prime
    return e_e_prime + delta_prime + pull, e_e_prime - pull


def at_shift_exact(
    e_e_prime: Wavenumber, delta_prime: Wavenumber, rabi_prime: Wavenumber
) -> tuple[Wavenumber, Wavenumber]:
    """Exact dressed-doublet positions E_e' + delta'/2 +/- W."""
    w = generalized_rabi(delta_prime, rabi_prime)
    return e_e_prime + delta_prime / 2.0 + w, e_e_prime + delta_prime / 2.0 - w


@dataclass(frozen=True)
class LineAssessment:
    """Per-line outcome of a control-field evaluation."""

    label: str
    role: str
    delta_prime: Wavenumber
    rabi: Wavenumber
    shift_near: Wavenumber
    shift_far: Wavenumber
    ratio: float
    verdict: str


@dataclass(frozen=True)
class ApplicabilityReport:
    """Per-line classification for one proposed control field."""

    records: tuple[LineAssessment, ...]
    threshold: float = DEFAULT_THRESHOLD

    def verdicts(self) -> dict[str, str]:
        return {rec.label: rec.verdict for rec in self.records}

    def __getitem__(self, label: str) -> LineAssessment:
        for rec in self.records:
            if rec.label == label:
                return rec
        raise KeyError(label)


def _assess_line(
    line: SpectralLine,
    control: ControlField | None,
    gamma_ref: Wavenumber | None,
    threshold: float,
) -> LineAssessment:
    gamma = line.gamma if gamma_ref is None else gamma_ref
    if control is None:
        # No coupled auxiliary state: infinitely far from any e-s resonance.
        return LineAssessment(
            label=line.label,
            role=ROLE_SPECTATOR,
            delta_prime=math.inf,
            rabi=0.0,
            shift_near=0.0,
            shift_far=0.0,
            ratio=math.inf,
            verdict=VERDICT_UNTOUCHED,
        )
    delta_prime = control.detuning
    rabi = control.rabi
    ratio = abs(delta_prime) / gamma
    if abs(delta_prime) <= gamma:
        if delta_prime == 0.0:
            shift_far = shift_near = math.nan
        else:
            far, near = at_shift_estimate(0.0, delta_prime, rabi)
            shift_near, shift_far = near, far
        return LineAssessment(
            label=line.label,
            role=ROLE_RESONANT,
            delta_prime=delta_prime,
            rabi=rabi,
            shift_near=shift_near,
            shift_far=shift_far,
            ratio=ratio,
            verdict=VERDICT_ELIMINATED,
        )
    far, near = at_shift_estimate(0.0, delta_prime, rabi)
    if ratio >= threshold and abs(near) < gamma / 10.0:
        verdict = VERDICT_UNTOUCHED
    elif abs(near) >= gamma / 10.0:
        verdict = VERDICT_SHIFTED
    else:
        verdict = VERDICT_VIOLATES
    return LineAssessment(
        label=line.label,
        role=ROLE_SPECTATOR,
        delta_prime=delta_prime,
        rabi=rabi,
        shift_near=near,
        shift_far=far,
        ratio=ratio,
        verdict=verdict,
    )


def assess_lines(
    lines: Sequence[SpectralLine],
    control_map: Mapping[str, ControlField],
    gamma_ref: Wavenumber | None = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> ApplicabilityReport:
    """Classify each line against the control acting on it (if any).

    `control_map` assigns a control field to line labels; absent labels
    count as having no coupled auxiliary state.
    """
    records = tuple(
        _assess_line(line, control_map.get(line.label), gamma_ref, threshold)
        for line in lines
    )
    return ApplicabilityReport(records=records, threshold=threshold)


def evaluate_control(
    cat: LineCatalog,
    control: ControlField,
    es_map: Mapping[str, Wavenumber | None],
    gamma_ref: Wavenumber | None = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> ApplicabilityReport:
    """Evaluate one control field against a catalog.

    `es_map` supplies each line's relevant e-s transition frequency; lines
    missing from the map (or mapped to None) have no coupled auxiliary
    state and are untouched by construction.  `gamma_ref` fixes the
    linewidth used in the criteria; default is each line's own width.
    """
    control_map: dict[str, ControlField] = {}
    for label, omega_es in es_map.items():
        if omega_es is None:
            continue
        control_map[label] = ControlField(
            omega_c=control.omega_c, rabi=control.rabi, omega_es=omega_es
        )
    return assess_lines(cat.lines, control_map, gamma_ref, threshold)


def report_to_csv(report: ApplicabilityReport) -> str:
    """Serialize a report; header `label,role,delta_prime_cm1,...`."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for rec in report.records:
        writer.writerow(
            [
                rec.label,
                rec.role,
                format_float(rec.delta_prime),
                format_float(rec.rabi),
                format_float(rec.shift_near),
                format_float(rec.shift_far),
                format_float(rec.ratio),
                rec.verdict,
            ]
        )
    return buf.getvalue()

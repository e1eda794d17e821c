"""Control-field modified absorption spectra of overlapping molecular lines.

The package simulates how a strong control laser reshapes the absorption
of a mixture of overlapping lines: a resonantly dressed line develops a
transparency hole and splits into an Autler-Townes doublet, off-resonant
lines are displaced, and the planner classifies which lines a proposed
control eliminates, shifts, or leaves intact.
"""

__version__ = "0.1.0"

from .catalog import (
    LineCatalog,
    RotorConstants,
    load_catalog,
    parse_linelist,
    rotational_energy,
    select_window,
    serialize_linelist,
)
from .dressed import (
    ControlField,
    DressedSystem,
    at_eigenvalues,
    dress,
    dressed_coefficients,
    generalized_rabi,
)
from .lineshape import (
    ComplexMatrix2,
    SpectralLine,
    SpectrumGrid,
    absorption_probability,
    default_grid,
    effective_hamiltonian,
    invert_2x2,
    line_profile,
    make_grid,
    synthesize_spectrum,
    transition_dipole,
    transition_dipole_resonant,
)
from .planner import (
    ApplicabilityReport,
    LineAssessment,
    assess_lines,
    at_shift_estimate,
    at_shift_exact,
    evaluate_control,
    report_to_csv,
)
from .scenarios import (
    ScenarioConfig,
    ScenarioResult,
    list_scenarios,
    load_scenario,
    read_config,
    run_scenario,
    spectrum_to_csv,
    with_rabi,
)
from .units import (
    FieldSpec,
    intensity_to_rabi,
    rabi_to_intensity,
    wavenumber_to_frequency,
)

__all__ = [
    "__version__",
    "ApplicabilityReport",
    "ComplexMatrix2",
    "ControlField",
    "DressedSystem",
    "FieldSpec",
    "LineAssessment",
    "LineCatalog",
    "RotorConstants",
    "ScenarioConfig",
    "ScenarioResult",
    "SpectralLine",
    "SpectrumGrid",
    "absorption_probability",
    "assess_lines",
    "at_eigenvalues",
    "at_shift_estimate",
    "at_shift_exact",
    "default_grid",
    "dress",
    "dressed_coefficients",
    "effective_hamiltonian",
    "evaluate_control",
    "generalized_rabi",
    "intensity_to_rabi",
    "invert_2x2",
    "line_profile",
    "list_scenarios",
    "load_catalog",
    "load_scenario",
    "make_grid",
    "parse_linelist",
    "rabi_to_intensity",
    "read_config",
    "report_to_csv",
    "rotational_energy",
    "run_scenario",
    "select_window",
    "serialize_linelist",
    "spectrum_to_csv",
    "synthesize_spectrum",
    "transition_dipole",
    "transition_dipole_resonant",
    "wavenumber_to_frequency",
    "with_rabi",
]

"""Exception types shared across the package.

The CLI maps these onto exit statuses: usage problems (including unknown
scenario names) exit 1, data and parse problems exit 2, numerical
failures exit 3.
"""


class EitSpecError(Exception):
    """Base class for all package errors."""


class InvalidDipoleError(EitSpecError, ValueError):
    """Dipole moment must be strictly positive for field conversions."""


class DegenerateCouplingError(EitSpecError, ValueError):
    """Dressed amplitudes are undefined at zero control coupling.

    At zero Rabi frequency the amplitude formulas are 0/0; callers must
    take the uncontrolled (plain Lorentzian) path instead.
    """


class SingularMatrixError(EitSpecError, ArithmeticError):
    """2x2 inversion rejected because |det| is below the floor."""


class AmbiguousControlError(EitSpecError, ValueError):
    """More than one control entry matched the same line."""


class ResonantInputError(EitSpecError, ValueError):
    """Perturbative shift formula called with zero detuning.

    A zero-detuning line is a resonantly driven line, not a spectator;
    the formula diverges there.
    """


class LinelistParseError(EitSpecError, ValueError):
    """Malformed line-list CSV; carries the offending row and column."""

    def __init__(self, message, row=None, column=None):
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column!r}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.row = row
        self.column = column


class ConfigError(EitSpecError, ValueError):
    """Malformed scenario configuration."""


class UnknownScenarioError(EitSpecError, LookupError):
    """Requested bundled scenario does not exist; lists available names."""

    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(
            f"unknown scenario {name!r}; available: {', '.join(self.available)}"
        )

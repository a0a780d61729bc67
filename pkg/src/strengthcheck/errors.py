"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input violates the documented domain of an operation."""


class UnsupportedDegreeError(PreconditionError):
    """The requested degree lies outside the range where a formula is valid."""


class InvariantViolation(RuntimeError):
    """Two routes that must agree disagreed. Always an implementation bug."""


class BoundViolation(RuntimeError):
    """The sampled join dimension exceeded the proven upper bound."""

    def __init__(self, report):
        super().__init__(
            f"oracle value {report.oracle_value} exceeds bound "
            f"{report.formula_bound} for {report.profile}"
        )
        self.report = report

"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible shapes; message names both."""


class GraphError(RuntimeError):
    """Backward-graph contract violation (e.g. non-scalar loss)."""


class LabelError(ValueError):
    """Unknown modulation label."""


class ParameterError(ValueError):
    """Numeric parameter outside its valid range."""


class SpecError(ValueError):
    """Invalid dataset specification."""


class DataError(ValueError):
    """Dataset unusable for the requested operation (e.g. empty)."""


class ConfigError(ValueError):
    """Invalid model or run configuration."""


class ConfigMismatchError(ConfigError):
    """Stored checkpoint configuration differs from the expected one."""


class FormatError(ValueError):
    """Malformed binary file. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class IntegrityError(FormatError):
    """File parses structurally but fails a consistency check."""


class BudgetError(ValueError):
    """Attack budget is degenerate (e.g. zero-power frame gives eps=0)."""


class DegenerateGradientError(RuntimeError):
    """Attack gradient vanished; the step direction is undefined."""


class MetricUndefinedError(ValueError):
    """Requested metric has an empty denominator."""

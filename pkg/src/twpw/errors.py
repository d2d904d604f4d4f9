"""Exception types shared across the package.

Every exception carries the process exit code the command line tool maps it
to, so the mapping lives in one place.
"""


class ToolError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ParameterError(ToolError):
    """An argument violates a documented precondition."""

    exit_code = 2


class FormatError(ToolError):
    """A graph or decomposition file does not follow its format."""

    exit_code = 2


class ScriptError(ToolError):
    """An operation script failed; remembers the offending step."""

    exit_code = 2

    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class CapabilityError(ToolError):
    """Input exceeds the size the exact machinery is guaranteed to handle."""

    exit_code = 3


class InconsistencyError(ToolError):
    """An internal invariant failed; results must not be trusted."""

    exit_code = 1

class DiagramError(ValueError):
    """Malformed or invalid diagram input."""

    def __init__(self, message: str, problems: list[str] | None = None):
        super().__init__(message)
        self.problems = problems or [message]


class SplitError(ValueError):
    """Crossing is not a crossing of the loose component with a strand of L."""


class NonUnitError(ValueError):
    """Series with constant term other than +1 or -1 has no inverse."""


class ResourceError(RuntimeError):
    """A configured size guard was exceeded."""


class ConsistencyError(RuntimeError):
    """Meridian solver failed to reach its fixpoint."""

"""Exception types shared across the package."""


class ResourceLimitError(Exception):
    """An operation was asked to exceed its configured size cap."""


class GraphParseError(ValueError):
    """Malformed graph6 or edge-list input; message names the offending offset/line."""


class NotACoronaImage(ValueError):
    """Inverse coefficient transform produced a negative count.

    This is a diagnostic, not a failure: it is how callers learn that a
    polynomial is not the corona image of any skeleton at the given
    (order, degree) pair.  Carries the first offending index and value.
    """

    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"reconstructed s_{index} = {value} < 0: not a corona image")


class RootConvergenceError(Exception):
    """Simultaneous root iteration failed to converge; carries the best iterate."""

    def __init__(self, message: str, approximations):
        self.approximations = approximations
        super().__init__(message)

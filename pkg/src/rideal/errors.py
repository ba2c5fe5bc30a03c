"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller handed us something malformed: an unknown letter, an
    out-of-range state, mismatched alphabets, or a basis that is not an atom."""


class ResourceLimitError(RuntimeError):
    """A construction exceeded its configured size cap.

    ``partial_count`` records how many elements/states had been produced
    when the cap was hit.
    """

    def __init__(self, message: str, partial_count: int | None = None):
        super().__init__(message)
        self.partial_count = partial_count

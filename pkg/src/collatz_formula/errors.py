"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the positive integers the map is defined on."""


class OrbitTooShort(Exception):
    """The orbit reached 1 before the requested number of steps."""

    def __init__(self, start, wanted, got):
        self.start = start
        self.wanted = wanted
        self.got = got
        super().__init__(
            f"orbit of {start} reaches 1 after {got} step(s); {wanted} requested"
        )


class PrefixMismatch(ValueError):
    """A step-size prefix does not describe a real orbit of the given start."""


class VerificationError(RuntimeError):
    """Direct iteration contradicted a constructed or predicted result."""

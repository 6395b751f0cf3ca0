class SilcError(Exception):
    exit_code = 1


class InputError(SilcError, ValueError):
    """Malformed or out-of-domain input."""

    exit_code = 2


class ResourceError(SilcError):
    """A configured budget or search ceiling was exhausted."""

    exit_code = 3


class VerificationError(SilcError):
    """An identity check failed; carries a structured report."""

    exit_code = 1

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InexactDivision(ArithmeticError):
    """A quotient by ``1 - q^a e^beta`` left a remainder."""

"""Exception hierarchy shared by every module."""


class EpicalcError(Exception):
    """Base class for all library errors."""


class InvalidValue(EpicalcError, ValueError):
    """A value is not a member of the calculus carrier."""


class EmptyInput(EpicalcError, ValueError):
    pass


class HomUnavailable(EpicalcError):
    """No internal hom is declared and no fallback applies."""


class NoWitness(EpicalcError):
    pass


class NotComplete(EpicalcError):
    pass


class PreconditionUnmet(EpicalcError):
    """Raised when a theorem check is requested outside its hypotheses.

    ``hypotheses`` lists every failed hypothesis by name.
    """

    def __init__(self, message, hypotheses=()):
        super().__init__(message)
        self.hypotheses = list(hypotheses)


class MismatchedCalculi(EpicalcError):
    pass


CalculusMismatch = MismatchedCalculi


class NotConservative(EpicalcError):
    pass


class NotClosed(EpicalcError):
    pass


class UnknownObject(EpicalcError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown object"


class InvalidPath(EpicalcError, ValueError):
    pass


class BoundaryValue(EpicalcError, ValueError):
    pass


class NonPositiveInput(EpicalcError, ValueError):
    pass


class UnknownCalculus(EpicalcError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown calculus"


class UnknownMap(EpicalcError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown map"


class InvariantBreach(EpicalcError):
    """An internal invariant that should hold by construction was violated."""

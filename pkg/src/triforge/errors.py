"""Exception hierarchy shared by all modules."""


class TriforgeError(Exception):
    """Base class for every error raised by the package."""


class ParameterError(TriforgeError, ValueError):
    """Input outside the documented parameter domain."""


class CapExceeded(TriforgeError):
    """A size cap (enumeration, dense or exact) would be exceeded."""


class SingularMatrix(ParameterError):
    pass


class ModulusMismatch(ParameterError):
    pass


class NonSymmetricGenerators(ParameterError):
    pass


class ClosureViolation(ParameterError):
    pass


class OrderMismatch(ParameterError):
    pass


class NotConnected(ParameterError):
    pass


class NotRegular(ParameterError):
    pass


class NotBipartite(ParameterError):
    pass


class MixedK(ParameterError):
    pass


class BadDivisibility(ParameterError):
    pass


class EvenK(ParameterError):
    pass


class StructuralCheckFailed(TriforgeError):
    """An internal consistency check failed; indicates a bug, not bad data."""


class ConnectivityFailure(StructuralCheckFailed):
    pass

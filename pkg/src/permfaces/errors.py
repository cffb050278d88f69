"""Exception types shared by every module."""


class PermfacesError(ValueError):
    """Base class; CLI maps subclasses to exit codes via ``exit_code``."""

    exit_code = 1


class NotPacked(PermfacesError):
    pass


class OutOfRange(PermfacesError):
    pass


class EmptyWord(PermfacesError):
    pass


class NotPermutation(PermfacesError):
    pass


class SizeMismatch(PermfacesError):
    pass


class SplitUnsupported(PermfacesError):
    pass


class NotCompatibleShuffle(PermfacesError):
    pass


class UnknownElement(PermfacesError):
    pass


class NotInternalEdge(PermfacesError):
    pass


class TooFewParts(PermfacesError):
    pass


class LeafHasNoWedge(PermfacesError):
    pass


class LeafHasNoRelations(PermfacesError):
    pass


class LeafIndexOutOfRange(PermfacesError):
    pass


class CapExceeded(PermfacesError):
    exit_code = 2


class ParseError(PermfacesError):
    exit_code = 3


class UnitUndefined(PermfacesError):
    exit_code = 4

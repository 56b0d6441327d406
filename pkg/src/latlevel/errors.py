"""Exception hierarchy shared by every module."""


class LatLevelError(Exception):
    """Base class for all library errors."""


class CycleError(LatLevelError):
    pass


class UnknownElement(LatLevelError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EmptyInput(LatLevelError):
    pass


class NotMeetSemilattice(LatLevelError):
    """Raised with the offending pair when a glb is missing or not unique."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotIntersectionClosed(LatLevelError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class OverlapError(LatLevelError, ValueError):
    pass


class NotMeetDistributive(LatLevelError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSimplicial(LatLevelError):
    pass


class TooLarge(LatLevelError):
    pass


class UnknownName(LatLevelError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InputFormatError(LatLevelError, ValueError):
    pass

"""Exception hierarchy shared by the workbench modules."""


class WorkbenchError(Exception):
    """Base class for all errors raised by fmapump."""


class MalformedLetter(WorkbenchError):
    """A letter is a constant that the automaton does not declare."""


class ParseError(WorkbenchError):
    """Word or automaton text could not be parsed."""


class InvalidInjection(WorkbenchError):
    pass


class InvalidPermutation(WorkbenchError):
    pass


class NotAccepted(WorkbenchError):
    """The word handed to a pumping engine is not in the language."""


class WindowTooShort(WorkbenchError):
    pass


class WordTooShort(WorkbenchError):
    pass


class NotARun(WorkbenchError):
    pass


class EmptyQ(WorkbenchError):
    pass


class UnsupportedSetShape(WorkbenchError):
    pass


class PreconditionViolated(WorkbenchError):
    """A documented precondition does not hold.

    ``which`` names the violated condition, e.g. ``"inclusion"``,
    ``"counts"`` or ``"boundary-states"``.
    """

    def __init__(self, which, message=""):
        self.which = which
        super().__init__(f"{which}: {message}" if message else which)


class BudgetExceeded(WorkbenchError):
    pass


class UnknownName(WorkbenchError):
    pass

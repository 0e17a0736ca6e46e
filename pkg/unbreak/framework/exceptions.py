class InputFileError(Exception):
    """Malformed graph, instance, family or table file."""

    def __init__(self, message: str, path: str = None, lineno: int = None):
        self.path = path
        self.lineno = lineno
        prefix = ""
        if path is not None:
            prefix += f"{path}:"
        if lineno is not None:
            prefix += f"{lineno}:"
        super().__init__(f"{prefix} {message}" if prefix else message)


class BudgetExceededError(Exception):
    """Enumeration cap or timeout hit before any answer was produced."""

    pass


class IncompatibleStructuresError(ValueError):
    pass


class NoDisjointCutError(ValueError):
    pass


class InternalFaultError(AssertionError):
    """Raised when a certificate produced by the library fails re-verification."""

    pass

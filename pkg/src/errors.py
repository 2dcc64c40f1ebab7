"""Exception hierarchy shared by every engine module."""


class TransferError(Exception):
    """Root of all engine errors."""


class DivisionByZero(TransferError, ZeroDivisionError):
    pass


class TowerMismatch(TransferError):
    """Operands live in towers where neither is a prefix of the other."""


class NotFiniteOverPrefix(TransferError):
    pass


class NonSquare(TransferError):
    pass


class FactorizationError(TransferError):
    """Factorization is not available for this coefficient field or input."""


class ReducibleMinimalPolynomial(TransferError):
    pass


class NotZeroDimensional(TransferError):
    pass


class SeparatingFormNotFound(TransferError):
    pass


class DecompositionError(TransferError):
    """Local dimensions of a decomposition do not add up to the quotient dimension."""


class InvalidComponent(TransferError):
    def __init__(self, reason: str, component: int | None = None):
        self.reason = reason
        self.component = component
        where = f"component {component}: " if component is not None else ""
        super().__init__(f"{where}{reason}")


class NonIntegralComponent(InvalidComponent):
    pass


class NonIntegralVariety(TransferError):
    pass


class NotAUnit(TransferError):
    pass


class NotInvertibleAtPoint(TransferError):
    pass


class NotAPluginPoint(TransferError):
    pass


class NotRegularizable(TransferError):
    pass


class NotInSubfield(TransferError):
    pass


class NotRadicial(TransferError):
    pass


class ClosureUnavailable(TransferError):
    pass


class OracleMismatch(TransferError):
    """The norm/trace path and the symmetric-power path disagree."""


# -- worksheet language ------------------------------------------------------

class ScriptError(TransferError):
    """An error located in a worksheet; line and column are 1-based."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ScriptSyntaxError(ScriptError):
    def __init__(self, found: str, expected, line: int, column: int):
        self.found = found
        self.expected = tuple(sorted(set(expected)))
        super().__init__(f"found {found!r}, expected one of {', '.join(self.expected)}", line, column)


class ScriptNameError(ScriptError):
    pass


class ScriptTypeError(ScriptError):
    pass


class ScriptExecutionError(ScriptError):
    """A module error raised while executing a statement."""

    def __init__(self, cause: Exception, line: int, column: int):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}", line, column)

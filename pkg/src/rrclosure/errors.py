"""Exception hierarchy."""


class RRError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatch(RRError):
    """Operands live in rings/modules of different shape."""


class DegenerateInput(RRError):
    """An operation was asked to work on a zero/unit ideal or an empty module
    where it is undefined."""


class ExponentOverflow(RRError):
    pass


class ParseError(RRError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)

"""Exception hierarchy shared by the engines and the CLI."""


class ChitopError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "internal"


class PreconditionError(ChitopError, ValueError):
    code = "precondition"


class ResourceBudgetExceeded(ChitopError):
    code = "resource_budget"


class GroebnerBudgetExceeded(ResourceBudgetExceeded):
    code = "groebner_budget"


class ProblemParseError(ChitopError, ValueError):
    code = "parse"

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

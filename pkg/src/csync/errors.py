"""Exception types shared by every module.

Input errors and resource-cap errors are deliberately distinct: running out
of a search budget is not the same answer as "no solution", and the CLI maps
them to different exit codes.
"""


class CsyncError(Exception):
    """Base class for all toolkit errors."""


class InputError(CsyncError):
    """Malformed or inconsistent input (bad alphabet, undeclared state, ...)."""


class ParseError(InputError):
    """Syntax error in a regex or automaton file; carries a position."""

    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (offset {offset})"
        super().__init__(message + where)


class ResourceLimitError(CsyncError):
    """A configured search cap was exceeded before an answer was found."""

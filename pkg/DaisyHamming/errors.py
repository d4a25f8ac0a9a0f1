# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Exception types raised by DaisyHamming.

Every input error is a ``ValueError`` so callers can catch bad input the same
way regardless of which module rejected it.
"""


class ShapeError(ValueError):
    """Invalid shape, out-of-range coordinate or mismatched vertex lengths."""


class BudgetExceededError(ValueError):
    """An enumeration would exceed the configured budget."""


class GraphError(ValueError):
    """Missing vertex, non-edge or disconnected input."""


class CoverError(ValueError):
    """A cover family fails a clause required by an expansion.

    Args:
        clause: short name of the violated clause, e.g. ``"cover-3"`` or
            ``"daisy"``.
        message: human readable explanation.
        witness: optional object reproducing the violation.
    """

    def __init__(self, clause, message, witness=None):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
        self.witness = witness


class DocumentError(ValueError):
    """A graph document cannot be parsed; ``field`` names the culprit."""

    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field '{field}'")
        if line is not None:
            where.append(f"line {line}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line


class TheoremViolation(AssertionError):
    """A property guaranteed for isometric daisy graphs did not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

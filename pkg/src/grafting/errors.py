"""Exception hierarchy shared by the whole package.

The CLI maps every GraftingError to exit code 2; "checked false" outcomes
(failed equality, rejected proof) are ordinary return values, not errors.
"""


class GraftingError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GraftingError):
    """Malformed textual input; carries the byte offset of the offender."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class IndexRangeError(GraftingError):
    """An insertion index outside 1..arity of its left operand."""


class CalculusError(GraftingError):
    """A term used outside the language of the requested calculus."""


class NotNormalError(GraftingError):
    """Normal-form classification applied to a reducible term."""


class ArrowTypeError(GraftingError):
    """An arrow term that does not type-check in its theory."""


class TheoryError(GraftingError):
    """Unknown theory name, or an operation the theory does not support."""


class MatchError(GraftingError):
    """No axiom match at the given position, or an unaddressable position."""

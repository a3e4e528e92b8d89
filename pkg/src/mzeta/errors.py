"""Exception hierarchy.

Everything that a caller can trigger with bad-but-well-formed input derives
from ToolkitError; the CLI maps those to exit code 1 with a JSON error body.
Genuine usage errors (bad flags) stay with argparse and exit code 2.
"""


class ToolkitError(Exception):
    """Base class for domain errors raised by the library."""

    code = "error"

    def payload(self):
        return {"error": self.code, "message": str(self)}


class RingMismatchError(ToolkitError):
    code = "ring_mismatch"


class InvalidElementError(ToolkitError):
    code = "invalid_element"


class NotInvertibleError(ToolkitError):
    code = "not_invertible"


class ExactDivisionError(ToolkitError):
    code = "exact_division"


class PrecisionError(ToolkitError):
    code = "precision"


class NonSymmetricError(ToolkitError):
    code = "non_symmetric"


class DegreeCutoffError(ToolkitError):
    code = "degree_cutoff"


class NoClosedFormError(ToolkitError):
    code = "no_closed_form"


class MissingDataError(ToolkitError):
    code = "missing_data"


class InvalidMeasureError(ToolkitError):
    code = "invalid_measure"


class InvalidInputError(ToolkitError):
    code = "invalid_input"


class VarietySyntaxError(ToolkitError):
    """Parse error in a variety expression; offset is a 1-based column."""

    code = "syntax"

    def __init__(self, message, offset):
        super().__init__(message)
        self.offset = offset

    def payload(self):
        return {"error": self.code, "message": str(self), "offset": self.offset}

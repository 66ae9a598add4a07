"""Exception types shared across the package.

Domain errors (bad input) subclass ValueError; internal-consistency errors
(two engines disagreeing, a bijection producing a duplicate, a structural
invariant failing) subclass RuntimeError.  The CLI maps the former to exit
code 1 and the latter to exit code 2.
"""


class ShapeError(ValueError):
    """A composition or column layout has the wrong length/total/sign."""


class LabelError(ValueError):
    """A label is not present in the parking function."""


class DomainError(ValueError):
    """A variable index or size is outside the supported range."""


class RangeError(ValueError):
    """An index argument is outside its admissible range."""


class ArityError(ValueError):
    """Polynomial operands live on different variable sets."""


class InconsistencyError(RuntimeError):
    """Two independent computation routes disagreed."""


class DuplicateError(RuntimeError):
    """An insertion sweep produced the same parking function twice."""


class InvariantError(RuntimeError):
    """A structural invariant that should hold by theorem was violated."""

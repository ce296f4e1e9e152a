"""Exception hierarchy.

Two failure families are kept apart deliberately:

* ``QpbError`` subclasses are ordinary errors (bad input, unsatisfiable
  request, truncation too small).
* ``FalsificationError`` subclasses mean a structural identity that is
  expected to hold was checked exactly and found false on this instance.
  These are first-class results, surfaced to the caller, never swallowed.
  The command line maps them to exit code 1 (crashes exit 2).
"""


class QpbError(Exception):
    pass


class DivisionByZero(QpbError, ZeroDivisionError):
    pass


class DimensionMismatch(QpbError):
    pass


class NoSolution(QpbError):
    pass


class ClosureExceeded(QpbError):
    """A Hopf-algebra product left the supplied coefficient span."""


class ParseError(QpbError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class InvariantViolation(QpbError):
    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        super().__init__(f"invariant violated: {axiom}" + (f": {detail}" if detail else ""))


class InconsistentRelations(QpbError):
    pass


class DifferentialNotWellDefined(QpbError):
    pass


class NoEquivariantSection(QpbError):
    pass


class NotAComplex(QpbError):
    pass


class FiltrationNotRespected(QpbError):
    pass


class TruncationInsufficient(QpbError):
    pass


class AxiomViolation(QpbError):
    """A supplied connection potential fails the connection axioms."""

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class FalsificationError(Exception):
    """An exactly checked identity from the underlying theory failed."""


class IsomorphismFailure(FalsificationError):
    pass


class SingularDecomposition(FalsificationError):
    pass


class StructureEquationMismatch(FalsificationError):
    pass


class NotClosed(FalsificationError):
    pass


class NotCohomologous(FalsificationError):
    pass


class NoPrimitive(FalsificationError):
    pass


class FixedPointMismatch(FalsificationError):
    pass

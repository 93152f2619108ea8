"""Exception hierarchy.

Every error carries a short machine-readable ``tag`` which the CLI uses to
emit structured error objects instead of tracebacks.
"""


class QuivrepError(Exception):
    tag = "error"


class InvalidParameterError(QuivrepError):
    tag = "invalid-parameter"


class InputFormatError(QuivrepError):
    tag = "input-format"


class DimensionMismatchError(QuivrepError):
    tag = "dimension-mismatch"


class VertexRangeError(QuivrepError):
    tag = "vertex-range"


class CyclicQuiverError(QuivrepError):
    tag = "cyclic-quiver"


class MutationError(QuivrepError):
    tag = "mutation-not-admissible"


class NonReducedWordError(QuivrepError):
    tag = "non-reduced-word"


class QuiverMismatchError(QuivrepError):
    tag = "quiver-mismatch"


class FieldMismatchError(QuivrepError):
    tag = "field-mismatch"


class SingularRootError(QuivrepError):
    tag = "singular-root"


class IntegralityError(QuivrepError):
    tag = "non-integral-reflection"


class NotARealRootError(QuivrepError):
    tag = "not-a-real-root"


class InconclusiveError(QuivrepError):
    tag = "inconclusive"


class UnsupportedScopeError(QuivrepError):
    tag = "unsupported-scope"


class ResourceGuardError(QuivrepError):
    tag = "resource-guard"


class NotAMorphismError(QuivrepError):
    tag = "not-a-morphism"


class NotSortableError(QuivrepError):
    tag = "not-c-sortable"


class NotTorsionFreeError(QuivrepError):
    tag = "not-torsion-free"


class InternalInvariantError(QuivrepError):
    tag = "internal-invariant"

"""Exception hierarchy.

Every user-facing failure derives from :class:`DomainError` and carries a
stable ``code`` string, which the CLI reports verbatim.  Internal faults
(a normalization bug, a failed cross-check) raise
:class:`InternalInconsistency`, which is deliberately *not* a domain error.
"""


class DomainError(ValueError):
    code = "DomainError"


class NotTrinomial(DomainError):
    code = "NotTrinomial"


class DuplicateMonomial(DomainError):
    code = "DuplicateMonomial"


class NotHomogeneous(DomainError):
    code = "NotHomogeneous"


class ZeroCoefficient(DomainError):
    code = "ZeroCoefficient"


class TrinomialSyntaxError(DomainError):
    """Malformed input text; ``offset`` is the byte offset of the problem."""

    code = "SyntaxError"

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class Unclassifiable(DomainError):
    code = "Unclassifiable"


class NotCoprime(DomainError):
    code = "NotCoprime"


class NotPrime(DomainError):
    code = "NotPrime"


class PBelowN(DomainError):
    code = "PBelowN"


class OutOfTheoremRange(DomainError):
    code = "OutOfTheoremRange"


class NotSymmetric(DomainError):
    code = "NotSymmetric"


class HypothesisNotMet(DomainError):
    code = "HypothesisNotMet"


class UsageError(DomainError):
    code = "UsageError"


class InternalInconsistency(RuntimeError):
    code = "InternalInconsistency"

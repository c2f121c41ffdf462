"""Exception hierarchy shared across the package."""


class ConjugateLogicError(Exception):
    """Base class for all domain errors raised by conjlogic."""


class DimensionMismatchError(ConjugateLogicError):
    """Operands describe a different number of systems, or an index is out of range."""


class PropParseError(ConjugateLogicError):
    """A proposition string does not match the ``<sign? letters>`` grammar.

    Attributes:
        position: character offset of the offending character.
        kind: one of ``"bad letter"``, ``"empty string"``, ``"malformed sign"``,
            ``"length mismatch"``.
    """

    def __init__(self, position: int, kind: str, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.kind = kind


class FormulaParseError(ConjugateLogicError):
    """A formula or transcript string is malformed."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundAtomError(ConjugateLogicError):
    """Evaluation reached an atom that the assignment does not cover."""


class TooManyAtomsError(ConjugateLogicError):
    """Exhaustive enumeration is capped at 8 atoms (3^8 assignments)."""


class TrivialPropositionError(ConjugateLogicError):
    """The all-identity proposition was passed where a nontrivial one is required."""


class IncompatibleSetError(ConjugateLogicError):
    """Two propositions in a joint reduction are incompatible.

    ``first`` and ``second`` are the 1-based indices of the offending pair.
    """

    def __init__(self, first: int, second: int):
        super().__init__(
            f"propositions {first} and {second} are incompatible"
        )
        self.first = first
        self.second = second


class DependentSetError(ConjugateLogicError):
    """A proposition is a product of the preceding ones (or equals one of them)."""

    def __init__(self, index: int, message: str | None = None):
        super().__init__(
            message or f"proposition {index} depends on the preceding ones"
        )
        self.index = index


class ContradictionError(ConjugateLogicError):
    """The asserted proposition is the negation of an existing prediction."""


class IncompatibleAssertionError(ConjugateLogicError):
    """Asserting a proposition incompatible with the current state; measure instead."""


class ClosureTooLargeError(ConjugateLogicError):
    """The prediction closure would exceed the configured size limit."""

"""conjlogic: a three-valued conjugate logic engine.

The package combines a three-valued propositional kernel with signed
Pauli-string propositions, transformations between them (in a stabilizer
quantum variant and a Spekkens-toy variant), joint reduction to
single-system form, prediction closures, measurement semantics, and the
contextuality and CZ-consistency analyses built on top.
"""

from .analysis import (
    ConsistencyReport,
    LawAnalysis,
    PmConstraint,
    PmReport,
    TruthTable,
    appendix_b_check,
    law_report,
    law_table,
    pm_square,
)
from .backend import BACKEND_NAME, available_backends, get_backend
from .clifford import (
    CzChoice,
    Gate,
    PassOp,
    TheoryVariant,
    Transcript,
    apply_gate,
    apply_transcript,
    cnot,
    invert_gate,
    invert_transcript,
    parse_transcript,
)
from .errors import (
    ClosureTooLargeError,
    ConjugateLogicError,
    ContradictionError,
    DependentSetError,
    DimensionMismatchError,
    FormulaParseError,
    IncompatibleAssertionError,
    IncompatibleSetError,
    PropParseError,
    TooManyAtomsError,
    TrivialPropositionError,
    UnboundAtomError,
)
from .kernel import (
    FALSE,
    INDETERMINATE,
    TRUE,
    And,
    Atom,
    CheckResult,
    Contradiction,
    Formula,
    Iff,
    Implies,
    LawReport,
    Not,
    Or,
    Tautology,
    TruthValue,
    Xor,
    conj,
    disj,
    evaluate,
    law_suite,
    logically_equivalent,
    logically_implies,
    material_iff,
    material_implies,
    negate,
    parse_formula,
    xor3,
)
from .knowledge import (
    KnowledgeState,
    MeasurementRecord,
    assert_prop,
    closure,
    closure_of,
    independent,
    measure,
    predicts,
)
from .pauli import (
    Proposition,
    compatible,
    format_prop,
    negate_prop,
    parse_prop,
    weight,
)
from .reduction import (
    ReductionResult,
    augment_set,
    reduce_pair,
    reduce_set,
    reduce_single,
)

__version__ = "0.1.0"

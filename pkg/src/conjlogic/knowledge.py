"""Knowledge states: conjunctions of compatible independent propositions.

A state over ``n`` systems is generated by at most ``n`` pairwise-compatible,
independent propositions.  Everything the conjunction logically entails (its
*prediction closure*) is produced by jointly reducing the generators to
single-X form, combining every subset of the reduced forms (letter union,
sign XOR), and expanding each combination back through the inverted
transcript.  The closure of ``k`` generators always has exactly ``2^k``
members, contains the trivial true proposition, and never contains a
proposition together with its negation.

Measuring a question ``q`` keeps the generators compatible with ``q``,
discards the rest, and adjoins ``q`` signed with the outcome; a question the
state already predicts leaves it unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .clifford import CzChoice, TheoryVariant
from .errors import (
    ClosureTooLargeError,
    ContradictionError,
    DependentSetError,
    DimensionMismatchError,
    IncompatibleAssertionError,
    IncompatibleSetError,
    TrivialPropositionError,
)
from .kernel import FALSE, INDETERMINATE, TRUE, TruthValue
from .pauli import Proposition, compatible
from .reduction import reduce_set
from .tableau import ExpansionBatch

#: Largest generator count for which the closure is materialised (2^k members).
CLOSURE_LIMIT = 24


def independent(props: list[Proposition]) -> bool:
    """GF(2) linear independence of the stacked (x|z) bit rows; signs ignored."""
    if not props:
        return True
    n = props[0].n
    for p in props:
        if p.n != n:
            raise DimensionMismatchError("propositions describe different system counts")
    basis: list[int] = []
    for p in props:
        row = (p.x << n) | p.z
        for pivot_row in basis:
            row = min(row, row ^ pivot_row)
        if row == 0:
            return False
        basis.append(row)
        basis.sort(reverse=True)
    return True


def closure_of(
    generators: tuple[Proposition, ...],
    n: int,
    variant: TheoryVariant,
    cz: CzChoice,
    kernels=None,
) -> list[Proposition]:
    """The 2^k predictions entailed by the generators (reduce, combine, expand)."""
    if len(generators) > CLOSURE_LIMIT:
        raise ClosureTooLargeError(
            f"closure of {len(generators)} generators exceeds 2^{CLOSURE_LIMIT} members"
        )
    if not generators:
        return [Proposition.identity(n)]
    result = reduce_set(list(generators), variant, cz, kernels=kernels)
    signs = [p.sign for p in result.reduced]
    batch = ExpansionBatch.subset_space(n, list(result.pivots), signs, kernels)
    batch.replay(result.transcript.inverted(), variant, cz)
    return batch.propositions()


@dataclass(frozen=True)
class MeasurementRecord:
    """One measurement: the question asked, its outcome bit, and the
    proposition (question signed with the outcome) that now holds."""

    measured: Proposition
    outcome: int
    resulting_prop: Proposition
    was_predicted: bool


class KnowledgeState:
    """An immutable knowledge state; operations return new states."""

    __slots__ = (
        "n",
        "variant",
        "cz",
        "generators",
        "poisoned",
        "conflicts",
        "_closure_map",
        "_closure_set",
    )

    def __init__(
        self,
        n: int,
        generators: tuple[Proposition, ...] = (),
        variant: TheoryVariant = TheoryVariant.QUANTUM,
        cz: CzChoice = CzChoice.STANDARD,
        poisoned: bool = False,
        conflicts: tuple[Proposition, ...] = (),
        validate: bool = True,
    ):
        self.n = n
        self.variant = variant
        self.cz = cz
        self.generators = tuple(generators)
        self.poisoned = poisoned
        self.conflicts = tuple(conflicts)
        self._closure_map = None
        self._closure_set = None
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one system")
        if len(self.generators) > self.n:
            raise DependentSetError(
                self.n + 1,
                f"at most {self.n} independent generators fit on {self.n} systems",
            )
        for i, p in enumerate(self.generators):
            if p.n != self.n:
                raise DimensionMismatchError(
                    f"generator {i + 1} describes {p.n} systems, state has {self.n}"
                )
            if p.is_trivial:
                raise TrivialPropositionError(
                    f"generator {i + 1} is the trivial proposition"
                )
        for i in range(len(self.generators)):
            for j in range(i + 1, len(self.generators)):
                if not compatible(self.generators[i], self.generators[j]):
                    raise IncompatibleSetError(i + 1, j + 1)
        if not independent(list(self.generators)):
            raise DependentSetError(len(self.generators))

    def _replace(self, generators) -> "KnowledgeState":
        return KnowledgeState(
            self.n, tuple(generators), self.variant, self.cz, validate=True
        )

    def with_conflict(self, prop: Proposition) -> "KnowledgeState":
        """A copy flagged as contradictory, recording the conflicting proposition."""
        state = KnowledgeState(
            self.n,
            self.generators,
            self.variant,
            self.cz,
            poisoned=True,
            conflicts=self.conflicts + (prop,),
            validate=False,
        )
        return state

    # -- queries -----------------------------------------------------------

    def _ensure_closure(self) -> None:
        if self._closure_map is not None:
            return
        props = closure_of(self.generators, self.n, self.variant, self.cz)
        mapping: dict[tuple[int, int], int] = {}
        for p in props:
            key = (p.x, p.z)
            if key in mapping and mapping[key] != p.sign:
                raise AssertionError("closure produced a proposition and its negation")
            mapping[key] = p.sign
        self._closure_map = mapping
        self._closure_set = frozenset(props)

    def closure(self) -> frozenset[Proposition]:
        self._ensure_closure()
        return self._closure_set

    def predicts(self, q: Proposition) -> TruthValue:
        """1 if q is in the closure, 0 if its negation is, ? otherwise."""
        if q.n != self.n:
            raise DimensionMismatchError(
                f"query describes {q.n} systems, state has {self.n}"
            )
        self._ensure_closure()
        sign = self._closure_map.get((q.x, q.z))
        if sign is None:
            return INDETERMINATE
        return TRUE if sign == q.sign else FALSE

    # -- updates -----------------------------------------------------------

    def assert_prop(self, p: Proposition) -> "KnowledgeState":
        """Adjoin a proposition claimed to hold.

        A proposition already predicted leaves the state unchanged, the
        negation of a prediction is a contradiction, and a proposition
        incompatible with a generator is refused: determining it requires a
        measurement.
        """
        if p.n != self.n:
            raise DimensionMismatchError(
                f"proposition describes {p.n} systems, state has {self.n}"
            )
        if p.is_trivial:
            raise TrivialPropositionError("cannot assert the trivial proposition")
        value = self.predicts(p)
        if value is TRUE:
            return self
        if value is FALSE:
            raise ContradictionError(
                f"state predicts {p.negated()}, cannot assert {p}"
            )
        for g in self.generators:
            if not compatible(g, p):
                raise IncompatibleAssertionError(
                    f"{p} is incompatible with generator {g}; use measure instead"
                )
        return self._replace(self.generators + (p,))

    def measure(
        self, q: Proposition, rng: random.Random
    ) -> tuple[MeasurementRecord, "KnowledgeState"]:
        """Measure a question, determining its truth value.

        Predicted questions return their predicted outcome and leave the
        state unchanged; otherwise the outcome is a fair coin from ``rng``,
        incompatible generators are dropped, and the signed question joins
        the generators.
        """
        if q.n != self.n:
            raise DimensionMismatchError(
                f"question describes {q.n} systems, state has {self.n}"
            )
        if q.is_trivial:
            raise TrivialPropositionError("cannot measure the trivial question")
        if q.sign != 0:
            raise ValueError("questions must be stated in sign-0 form")
        value = self.predicts(q)
        if value is not INDETERMINATE:
            outcome = 0 if value is TRUE else 1
            record = MeasurementRecord(q, outcome, q.with_sign(outcome), True)
            return record, self
        outcome = rng.getrandbits(1)
        survivors = [g for g in self.generators if compatible(g, q)]
        record = MeasurementRecord(q, outcome, q.with_sign(outcome), False)
        return record, self._replace(survivors + [q.with_sign(outcome)])

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant.value,
            "cz": self.cz.value,
            "generators": [g.to_json_dict() for g in self.generators],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "KnowledgeState":
        return cls(
            int(data["n"]),
            tuple(Proposition.from_json_dict(g) for g in data["generators"]),
            TheoryVariant(data["variant"]),
            CzChoice(data["cz"]),
        )

    def __repr__(self) -> str:
        gens = " ".join(str(g) for g in self.generators) or "<empty>"
        flag = " poisoned" if self.poisoned else ""
        return f"KnowledgeState(n={self.n}, {gens}{flag})"


# Module-level forms of the state operations.


def assert_prop(state: KnowledgeState, p: Proposition) -> KnowledgeState:
    return state.assert_prop(p)


def closure(state: KnowledgeState) -> frozenset[Proposition]:
    return state.closure()


def predicts(state: KnowledgeState, q: Proposition):
    return state.predicts(q)


def measure(state: KnowledgeState, q: Proposition, rng: random.Random):
    return state.measure(q, rng)

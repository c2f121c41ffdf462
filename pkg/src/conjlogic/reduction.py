"""Joint reduction of propositions to single-system form.

One proposition reduces by normalising every nontrivial letter with S
(``Y -> -X``) and H (``X -> Z``) so that the first nontrivial position
carries an X and the rest carry Z or I, then clearing the remaining Z
positions with CZ against the pivot.  A set reduces proposition by
proposition: each new row is handled on the positions not yet used as
pivots, and any leftover X at an earlier pivot is cleared by an H-CZ-H
triplet against the row's own pivot, which leaves every previously reduced
row untouched.  The emitted transcript therefore maps *each* input to its
reduced form exactly, in both theory variants, and its inverse undoes the
reduction.

Pairs additionally classify their relation: two compatible independent
propositions always land on distinct systems, incompatible ones land on the
same system with different letters (via Hadamards on both systems followed
by CZ).
"""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import CzChoice, PassOp, TheoryVariant, Transcript
from .errors import (
    DependentSetError,
    DimensionMismatchError,
    IncompatibleSetError,
    TrivialPropositionError,
)
from .pauli import Proposition, compatible
from .tableau import ReductionTableau

RELATION_SINGLE = "single"
RELATION_COMPATIBLE = "compatible-distinct-systems"
RELATION_INCOMPATIBLE = "incompatible-same-system"


@dataclass(frozen=True)
class ReductionResult:
    """Transcript plus the reduced single-system forms.

    ``pivots`` gives, per proposition, the position carrying its nontrivial
    letter (0-based).  Applying ``transcript`` to input ``i`` yields
    ``reduced[i]``; the inverted transcript maps back.
    """

    transcript: Transcript
    reduced: tuple[Proposition, ...]
    relation: str
    pivots: tuple[int, ...]


class _Reducer:
    def __init__(self, props, variant, cz, kernels=None):
        self.tab = ReductionTableau(list(props), kernels)
        self.variant = variant
        self.cz = cz
        self.ops: list[PassOp] = []
        self.pivots: list[int] = []
        self.full = (1 << self.tab.n) - 1

    def emit(self, kind: str, mask: int, pivot: int = -1) -> None:
        if not mask:
            return
        op = PassOp(kind, mask, pivot)
        self.ops.append(op)
        self.tab.apply(op, self.variant, self.cz)

    def normalize(self, row: int, region: int) -> int:
        """S/H/CZ the row so ``region`` holds a single X; returns its position."""
        x, z = self.tab.row_x(row), self.tab.row_z(row)
        support = (x | z) & region
        pivot = (support & -support).bit_length() - 1
        self.emit("S", x & z & region)
        x, z = self.tab.row_x(row), self.tab.row_z(row)
        hmask = x & ~z & region & ~(1 << pivot)
        if z >> pivot & 1:  # pivot letter is Z; Y became X already
            hmask |= 1 << pivot
        self.emit("H", hmask)
        x, z = self.tab.row_x(row), self.tab.row_z(row)
        self.emit("CZ", z & ~x & region & ~(1 << pivot), pivot)
        return pivot

    def strip(self, row: int, pivot: int, mask: int) -> None:
        """Clear X letters at ``mask`` using H-CZ-H against the row's pivot.

        Earlier rows hold single X letters inside ``mask`` or away from it;
        either way the triplet restores them exactly.
        """
        self.emit("H", mask)
        self.emit("CZ", mask, pivot)
        self.emit("H", mask)

    def reduce_next(self, row: int) -> None:
        pivot_mask = 0
        for t in self.pivots:
            pivot_mask |= 1 << t
        x, z = self.tab.row_x(row), self.tab.row_z(row)
        strip_mask = 0
        for j, t in enumerate(self.pivots):
            if z >> t & 1:
                raise IncompatibleSetError(j + 1, row + 1)
            if x >> t & 1:
                strip_mask |= 1 << t
        region = self.full & ~pivot_mask
        if not ((x | z) & region):
            raise DependentSetError(row + 1)
        pivot = self.normalize(row, region)
        self.strip(row, pivot, strip_mask)
        self.pivots.append(pivot)

    def result(self, relation: str) -> ReductionResult:
        return ReductionResult(
            Transcript(self.ops),
            tuple(self.tab.proposition(r) for r in range(self.tab.nrows)),
            relation,
            tuple(self.pivots),
        )


def reduce_single(
    p: Proposition,
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
    *,
    kernels=None,
) -> ReductionResult:
    """Reduce one proposition to a single X at its first nontrivial position."""
    if p.is_trivial:
        raise TrivialPropositionError("cannot reduce the all-identity proposition")
    reducer = _Reducer([p], variant, cz, kernels)
    reducer.reduce_next(0)
    return reducer.result(RELATION_SINGLE)


def reduce_pair(
    p: Proposition,
    q: Proposition,
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
    *,
    kernels=None,
) -> ReductionResult:
    """Jointly reduce two propositions, classifying their relation."""
    if p.n != q.n:
        raise DimensionMismatchError(f"propositions describe {p.n} and {q.n} systems")
    if p.is_trivial or q.is_trivial:
        raise TrivialPropositionError("cannot reduce the all-identity proposition")
    if p.x == q.x and p.z == q.z:
        raise DependentSetError(2, "second proposition equals the first up to sign")
    reducer = _Reducer([p, q], variant, cz, kernels)
    reducer.reduce_next(0)
    p0 = reducer.pivots[0]
    x, z = reducer.tab.row_x(1), reducer.tab.row_z(1)
    rest = reducer.full & ~(1 << p0)
    if not ((x | z) & rest):
        # already single-system on the shared pivot; X alone is excluded above
        reducer.pivots.append(p0)
        return reducer.result(RELATION_INCOMPATIBLE)
    if z >> p0 & 1:  # Y or Z at the first pivot: incompatible pair
        p1 = reducer.normalize(1, rest)
        reducer.emit("H", (1 << p0) | (1 << p1))
        reducer.emit("CZ", 1 << p1, p0)
        reducer.pivots.append(p0)
        return reducer.result(RELATION_INCOMPATIBLE)
    reducer.reduce_next(1)
    return reducer.result(RELATION_COMPATIBLE)


def reduce_set(
    props: list[Proposition],
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
    *,
    kernels=None,
) -> ReductionResult:
    """Simultaneously reduce pairwise-compatible independent propositions.

    Proposition ``i`` ends up as a single X at ``pivots[i]``; an
    incompatible or dependent input raises with the offending (1-based)
    indices.
    """
    props = list(props)
    if not props:
        return ReductionResult(Transcript(), (), RELATION_COMPATIBLE, ())
    if len(props) > props[0].n:
        raise DependentSetError(
            props[0].n + 1,
            f"at most {props[0].n} independent propositions fit on {props[0].n} systems",
        )
    reducer = _Reducer(props, variant, cz, kernels)
    for m in range(len(props)):
        reducer.reduce_next(m)
    relation = RELATION_SINGLE if len(props) == 1 else RELATION_COMPATIBLE
    return reducer.result(relation)


def augment_set(
    props: list[Proposition],
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
    *,
    kernels=None,
) -> list[Proposition]:
    """Extend a compatible independent set to the maximal size ``n``.

    The set is reduced, fresh single-X propositions are placed on the unused
    positions, and everything is expanded back.  The first ``len(props)``
    entries of the result are the original propositions.
    """
    if not props:
        raise ValueError("need at least one proposition to infer the system count")
    n = props[0].n
    result = reduce_set(props, variant, cz, kernels=kernels)
    used = set(result.pivots)
    extended = list(result.reduced)
    for position in range(n):
        if position not in used:
            extended.append(Proposition.single(n, position, "X"))
    inv = result.transcript.inverted()
    return [inv.apply(r, variant, cz) for r in extended]

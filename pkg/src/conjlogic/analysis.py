"""Headline analyses built on the kernel, reduction and knowledge layers.

* :func:`pm_square` derives the six parity constraints of the 3x3
  Peres-Mermin grid from prediction closures and searches all 512 binary
  assignments: the quantum S/H rules make the constraints unsatisfiable,
  the toy rules leave them satisfiable.
* :func:`appendix_b_check` derives the same three-system prediction along
  two transformation routes; with the standard CZ both routes agree, with
  the tilde CZ they contradict each other.
* :func:`law_report` runs the kernel law suite and renders each law's full
  truth table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernel
from .clifford import CzChoice, PassOp, TheoryVariant, Transcript
from .kernel import (
    CONTRADICTION,
    TAUTOLOGY,
    And,
    Atom,
    Formula,
    Iff,
    Implies,
    LawReport,
    Not,
    Or,
    TruthValue,
    evaluate,
    law_suite,
)
from .knowledge import KnowledgeState
from .pauli import Proposition, compatible

# --------------------------------------------------------------------------
# Peres-Mermin square

_PM_LETTERS = (
    ("ZI", "IZ", "ZZ"),
    ("IX", "XI", "XX"),
    ("ZX", "XZ", "YY"),
)

#: (label, (a, b, c)) index triples into the flattened grid; c is predicted
#: from a and b.
_PM_LINES = (
    ("row 1", (0, 1, 2)),
    ("row 2", (3, 4, 5)),
    ("row 3", (6, 7, 8)),
    ("column 1", (0, 3, 6)),
    ("column 2", (1, 4, 7)),
    ("column 3", (2, 5, 8)),
)


@dataclass(frozen=True)
class PmConstraint:
    label: str
    members: tuple[Proposition, Proposition, Proposition]
    parity: int


@dataclass(frozen=True)
class PmReport:
    variant: TheoryVariant
    square: tuple[tuple[Proposition, ...], ...]
    constraints: tuple[PmConstraint, ...]
    parity_xor: int
    satisfiable: bool
    assignment: tuple[int, ...] | None

    def grid_flat(self) -> tuple[Proposition, ...]:
        return tuple(p for row in self.square for p in row)

    def to_json_dict(self) -> dict:
        flat = self.grid_flat()
        data = {
            "variant": self.variant.value,
            "square": [[p.to_json_dict() for p in row] for row in self.square],
            "constraints": [
                {
                    "label": c.label,
                    "members": [p.letters for p in c.members],
                    "parity": c.parity,
                }
                for c in self.constraints
            ],
            "parity_xor": self.parity_xor,
            "satisfiable": self.satisfiable,
            "assignment": None
            if self.assignment is None
            else {flat[i].letters: v for i, v in enumerate(self.assignment)},
        }
        return data

    def to_text(self) -> str:
        lines = [f"theory: {self.variant.value}", "square:"]
        for row in self.square:
            lines.append("  " + " ".join(str(p) for p in row))
        lines.append("constraints:")
        for c in self.constraints:
            members = " ^ ".join(p.letters for p in c.members)
            lines.append(f"  {c.label}: {members} = {c.parity}")
        lines.append(f"parity check: {self.parity_xor}")
        lines.append(f"satisfiable: {'yes' if self.satisfiable else 'no'}")
        if self.assignment is not None:
            flat = self.grid_flat()
            witness = " ".join(
                f"{flat[i].letters}={v}" for i, v in enumerate(self.assignment)
            )
            lines.append(f"witness: {witness}")
        return "\n".join(lines)


def pm_square(variant: TheoryVariant) -> PmReport:
    """Build the grid, derive the six line parities, and search all 2^9 values."""
    square = tuple(
        tuple(Proposition.from_letters(s) for s in row) for row in _PM_LETTERS
    )
    flat = tuple(p for row in square for p in row)
    constraints = []
    for label, (ia, ib, ic) in _PM_LINES:
        a, b, c = flat[ia], flat[ib], flat[ic]
        state = KnowledgeState(2, (a, b), variant)
        predicted = None
        for member in state.closure():
            if (member.x, member.z) == (c.x, c.z):
                predicted = member
                break
        if predicted is None:
            raise AssertionError(f"{label}: closure lacks the third grid member")
        constraints.append(PmConstraint(label, (a, b, c), predicted.sign))
    parity_xor = 0
    for c in constraints:
        parity_xor ^= c.parity
    satisfiable = False
    witness = None
    for values in itertools.product((0, 1), repeat=9):
        if all(
            values[ia] ^ values[ib] ^ values[ic] == c.parity
            for c, (_, (ia, ib, ic)) in zip(constraints, _PM_LINES)
        ):
            satisfiable = True
            witness = values
            break
    return PmReport(
        variant, square, tuple(constraints), parity_xor, satisfiable, witness
    )


# --------------------------------------------------------------------------
# CZ-choice consistency

_PREMISE_LETTERS = ("YYI", "IYY")
_TRIPLE_CZ = Transcript(
    (
        PassOp("CZ", 0b010, 0),  # pair (1,2)
        PassOp("CZ", 0b100, 1),  # pair (2,3)
        PassOp("CZ", 0b100, 0),  # pair (1,3)
    )
)


@dataclass(frozen=True)
class ConsistencyReport:
    cz: CzChoice
    premise: tuple[Proposition, Proposition]
    premise_reduced: tuple[Proposition, ...]
    derived: tuple[Proposition, Proposition]
    contradiction_found: bool
    state: KnowledgeState

    def to_json_dict(self) -> dict:
        return {
            "cz": self.cz.value,
            "premise": [p.to_json_dict() for p in self.premise],
            "premise_reduced": [p.to_json_dict() for p in self.premise_reduced],
            "derived": [p.to_json_dict() for p in self.derived],
            "contradiction_found": self.contradiction_found,
        }

    def to_text(self) -> str:
        lines = [
            f"cz: {self.cz.value}",
            "premise: " + " ".join(str(p) for p in self.premise),
            "reduced: " + " ".join(str(p) for p in self.premise_reduced),
            f"route a: {self.derived[0]}",
            f"route b: {self.derived[1]}",
            f"contradiction: {'yes' if self.contradiction_found else 'no'}",
        ]
        return "\n".join(lines)


def _closure_member(state: KnowledgeState, letters: str) -> Proposition:
    target = Proposition.from_letters(letters)
    for member in state.closure():
        if (member.x, member.z) == (target.x, target.z):
            return member
    raise AssertionError(f"closure lacks a {letters} member")


def appendix_b_check(cz: CzChoice) -> ConsistencyReport:
    """Derive the YIY prediction from the -YYI, -IYY premise along two routes.

    Route (a) reduces the premise, combines, and expands back.  Route (b)
    rewrites the premise as a triple-CZ image of X-strings, combines there,
    and maps the combination forward.  The routes agree for the standard CZ
    and disagree for the tilde CZ, which poisons the state.
    """
    variant = TheoryVariant.QUANTUM
    premise = tuple(
        Proposition.from_letters(s, sign=1) for s in _PREMISE_LETTERS
    )
    state = KnowledgeState(3, premise, variant, cz)

    from .reduction import reduce_set

    reduction = reduce_set(list(premise), variant, cz)
    route_a = _closure_member(state, "YIY")

    preimages = tuple(_TRIPLE_CZ.apply(p, variant, cz) for p in premise)
    pre_state = KnowledgeState(3, preimages, variant, cz)
    route_b = _TRIPLE_CZ.apply(_closure_member(pre_state, "XIX"), variant, cz)

    contradiction = route_a.sign != route_b.sign
    if contradiction:
        state = state.with_conflict(route_b)
    return ConsistencyReport(
        cz, premise, reduction.reduced, (route_a, route_b), contradiction, state
    )


# --------------------------------------------------------------------------
# Law truth tables

_P, _Q, _R = Atom(0), Atom(1), Atom(2)


@dataclass(frozen=True)
class TruthTable:
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def to_text(self) -> str:
        widths = [
            max(len(h), max((len(r[i]) for r in self.rows), default=0))
            for i, h in enumerate(self.headers)
        ]
        def fmt(cells):
            return "  ".join(c.center(w) for c, w in zip(cells, widths))
        out = [self.title, fmt(self.headers)]
        out.extend(fmt(r) for r in self.rows)
        return "\n".join(out)


# Column layouts for rendering; laws not listed fall back to the plain
# lhs/rhs columns of their parts.
_LAYOUTS: dict[str, tuple[tuple[tuple[str, Formula], ...], tuple | None]] = {
    "E2": (
        (
            ("p", _P),
            ("q", _Q),
            ("p∧q", And(_P, _Q)),
            ("¬p∨¬q", Or(Not(_P), Not(_Q))),
            ("p∨q", Or(_P, _Q)),
            ("¬p∧¬q", And(Not(_P), Not(_Q))),
        ),
        None,
    ),
    "E9": (
        (
            ("p", _P),
            ("¬p", Not(_P)),
            ("p∨¬p", Or(_P, Not(_P))),
            ("<I>", TAUTOLOGY),
            ("p∧¬p", And(_P, Not(_P))),
            ("<-I>", CONTRADICTION),
        ),
        (
            (TruthValue.FALSE,),
            (TruthValue.TRUE,),
            (TruthValue.INDETERMINATE,),
        ),
    ),
    "E10": (
        (
            ("p", _P),
            ("q", _Q),
            ("p∧q", And(_P, _Q)),
            ("p∨(p∧q)", Or(_P, And(_P, _Q))),
            ("p∨q", Or(_P, _Q)),
            ("p∧(p∨q)", And(_P, Or(_P, _Q))),
        ),
        None,
    ),
    "E11": (
        (
            ("p", _P),
            ("q", _Q),
            ("p→q", Implies(_P, _Q)),
            ("¬p∨q", Or(Not(_P), _Q)),
            ("(p→q)→(¬p∨q)", Implies(Implies(_P, _Q), Or(Not(_P), _Q))),
            ("(p→q)←(¬p∨q)", Implies(Or(Not(_P), _Q), Implies(_P, _Q))),
        ),
        None,
    ),
    "E12": (
        (
            ("p", _P),
            ("q", _Q),
            ("p→q", Implies(_P, _Q)),
            ("¬p", Not(_P)),
            ("¬q", Not(_Q)),
            ("¬q→¬p", Implies(Not(_Q), Not(_P))),
        ),
        None,
    ),
    "E13": (
        (
            ("p", _P),
            ("q", _Q),
            ("p↔q", Iff(_P, _Q)),
            ("p→q", Implies(_P, _Q)),
            ("p←q", Implies(_Q, _P)),
        ),
        None,
    ),
    "I1": (
        (
            ("p", _P),
            ("q", _Q),
            ("p→q", Implies(_P, _Q)),
            ("(p→q)∧p", And(Implies(_P, _Q), _P)),
            ("[(p→q)∧p]→q", Implies(And(Implies(_P, _Q), _P), _Q)),
        ),
        None,
    ),
    "I2": (
        (
            ("p", _P),
            ("q", _Q),
            ("r", _R),
            ("p→q", Implies(_P, _Q)),
            ("q→r", Implies(_Q, _R)),
            ("(p→q)∧(q→r)", And(Implies(_P, _Q), Implies(_Q, _R))),
            ("p→r", Implies(_P, _R)),
        ),
        None,
    ),
    "I3": (
        (
            ("p", _P),
            ("q", _Q),
            ("p→q", Implies(_P, _Q)),
            ("(p→q)∧¬q", And(Implies(_P, _Q), Not(_Q))),
            ("[(p→q)∧¬q]→¬p", Implies(And(Implies(_P, _Q), Not(_Q)), Not(_P))),
        ),
        None,
    ),
    "I4": (
        (
            ("p", _P),
            ("q", _Q),
            ("p∧q", And(_P, _Q)),
            ("(p∧q)→p", Implies(And(_P, _Q), _P)),
            ("p∨q", Or(_P, _Q)),
            ("p→(p∨q)", Implies(_P, Or(_P, _Q))),
        ),
        None,
    ),
    "I5": (
        (
            ("p", _P),
            ("q", _Q),
            ("p∨q", Or(_P, _Q)),
            ("p→(p∨q)", Implies(_P, Or(_P, _Q))),
        ),
        None,
    ),
    "I6": (
        (
            ("p", _P),
            ("q", _Q),
            ("p∨q", Or(_P, _Q)),
            ("(p∨q)∧¬q", And(Or(_P, _Q), Not(_Q))),
            ("[(p∨q)∧¬q]→p", Implies(And(Or(_P, _Q), Not(_Q)), _P)),
        ),
        None,
    ),
    "I7": (
        (
            ("p", _P),
            ("¬p→<-I>", Implies(Not(_P), CONTRADICTION)),
            ("(¬p→<-I>)→p", Implies(Implies(Not(_P), CONTRADICTION), _P)),
        ),
        None,
    ),
    "I8": (
        (
            ("p", _P),
            ("q", _Q),
            ("r", _R),
            ("p→r", Implies(_P, _R)),
            ("q→r", Implies(_Q, _R)),
            ("(p→r)∧(q→r)", And(Implies(_P, _R), Implies(_Q, _R))),
            ("(p∨q)→r", Implies(Or(_P, _Q), _R)),
        ),
        None,
    ),
}


def law_table(law_id: str) -> TruthTable:
    """Render one law's truth table with all intermediate columns."""
    law = next(l for l in kernel.LAWS if l.law_id == law_id)
    layout = _LAYOUTS.get(law_id)
    if layout is None:
        columns: list[tuple[str, Formula]] = []
        k = kernel.atom_count(*(f for part in law.parts for f in part))
        for i in range(k):
            columns.append((kernel.ATOM_NAMES[i], Atom(i)))
        for lhs, rhs in law.parts:
            columns.append((kernel.format_formula(lhs), lhs))
            columns.append((kernel.format_formula(rhs), rhs))
        row_order = None
    else:
        columns, row_order = list(layout[0]), layout[1]
    k = kernel.atom_count(*(f for _, f in columns))
    if row_order is None:
        row_values = itertools.product(kernel.VALUE_ORDER, repeat=k)
    else:
        row_values = row_order
    rows = []
    for values in row_values:
        assignment = dict(enumerate(values))
        rows.append(tuple(str(evaluate(f, assignment)) for _, f in columns))
    return TruthTable(
        f"({law_id}) {law.name}",
        tuple(h for h, _ in columns),
        tuple(rows),
    )


@dataclass(frozen=True)
class LawAnalysis:
    suite: LawReport
    tables: tuple[TruthTable, ...]

    def table(self, law_id: str) -> TruthTable:
        for t in self.tables:
            if t.title.startswith(f"({law_id})"):
                return t
        raise KeyError(law_id)

    def to_text(self) -> str:
        parts = [self.suite.to_text(), ""]
        for t in self.tables:
            parts.append(t.to_text())
            parts.append("")
        return "\n".join(parts).rstrip() + "\n"


def law_report() -> LawAnalysis:
    """The kernel law suite plus a rendered truth table per law."""
    suite = law_suite()
    tables = tuple(law_table(law.law_id) for law in kernel.LAWS)
    return LawAnalysis(suite, tables)

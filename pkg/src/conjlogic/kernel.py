"""Three-valued propositional kernel.

Truth values are ``0`` (false), ``?`` (indeterminate) and ``1`` (true).  The
connectives restrict to ordinary Boolean logic on determinate inputs; the
extension to ``?`` is fixed so that conjunction and disjunction stay duals,
exclusive disjunction is ``?`` whenever an operand is, and the material
conditional/biconditional additionally count two indeterminate operands as
agreeing.  Logical implication and equivalence between formulas are decided
by exhaustive enumeration of all ``3^k`` assignments, which keeps the whole
classical law catalogue mechanically checkable, counterexamples included.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import (
    FormulaParseError,
    TooManyAtomsError,
    UnboundAtomError,
)

MAX_ATOMS = 8

ATOM_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


class TruthValue(enum.Enum):
    """One of the three truth values ``0``, ``?``, ``1``."""

    FALSE = "0"
    INDETERMINATE = "?"
    TRUE = "1"

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"TruthValue({self.value!r})"

    @classmethod
    def from_symbol(cls, symbol: str) -> "TruthValue":
        try:
            return cls(symbol)
        except ValueError:
            raise ValueError(f"not a truth value symbol: {symbol!r}") from None


FALSE = TruthValue.FALSE
INDETERMINATE = TruthValue.INDETERMINATE
TRUE = TruthValue.TRUE

#: Enumeration (and display) order of the three values: 0 < ? < 1.
VALUE_ORDER = (FALSE, INDETERMINATE, TRUE)


def negate(v: TruthValue) -> TruthValue:
    """NOT: swaps 0 and 1, fixes ?."""
    if v is FALSE:
        return TRUE
    if v is TRUE:
        return FALSE
    return INDETERMINATE


def conj(a: TruthValue, b: TruthValue) -> TruthValue:
    """AND: 0 if either operand is 0, 1 if both are 1, ? otherwise."""
    if a is FALSE or b is FALSE:
        return FALSE
    if a is TRUE and b is TRUE:
        return TRUE
    return INDETERMINATE


def disj(a: TruthValue, b: TruthValue) -> TruthValue:
    """OR: 1 if either operand is 1, 0 if both are 0, ? otherwise."""
    if a is TRUE or b is TRUE:
        return TRUE
    if a is FALSE and b is FALSE:
        return FALSE
    return INDETERMINATE


def xor3(a: TruthValue, b: TruthValue) -> TruthValue:
    """XOR: parity of two determinate operands, ? as soon as one operand is ?."""
    if a is INDETERMINATE or b is INDETERMINATE:
        return INDETERMINATE
    return TRUE if a is not b else FALSE


def material_implies(a: TruthValue, b: TruthValue) -> TruthValue:
    """Material conditional: 1 if a is 0, b is 1, or a equals b; else 0.

    Always determinate.  Note ``(?, ?) -> 1`` while ``(?, 0)`` and ``(1, ?)``
    give 0.
    """
    if a is FALSE or b is TRUE or a is b:
        return TRUE
    return FALSE


def material_iff(a: TruthValue, b: TruthValue) -> TruthValue:
    """Material biconditional: 1 exactly when both operands have the same value."""
    return TRUE if a is b else FALSE


# --------------------------------------------------------------------------
# Formula AST


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Xor:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Tautology:
    pass


@dataclass(frozen=True)
class Contradiction:
    pass


Formula = Union[Atom, Not, And, Or, Xor, Implies, Iff, Tautology, Contradiction]

TAUTOLOGY = Tautology()
CONTRADICTION = Contradiction()

_BINARY_OPS = {
    And: conj,
    Or: disj,
    Xor: xor3,
    Implies: material_implies,
    Iff: material_iff,
}


def evaluate(formula: Formula, assignment: Mapping[int, TruthValue]) -> TruthValue:
    """Evaluate ``formula`` bottom-up under ``assignment`` (atom id -> value)."""
    if isinstance(formula, Atom):
        try:
            return assignment[formula.index]
        except KeyError:
            raise UnboundAtomError(
                f"atom {formula.index} has no assigned value"
            ) from None
    if isinstance(formula, Not):
        return negate(evaluate(formula.operand, assignment))
    if isinstance(formula, Tautology):
        return TRUE
    if isinstance(formula, Contradiction):
        return FALSE
    op = _BINARY_OPS[type(formula)]
    return op(evaluate(formula.left, assignment), evaluate(formula.right, assignment))


def atoms_of(formula: Formula) -> frozenset[int]:
    """The set of atom ids appearing in ``formula``."""
    if isinstance(formula, Atom):
        return frozenset((formula.index,))
    if isinstance(formula, Not):
        return atoms_of(formula.operand)
    if isinstance(formula, (Tautology, Contradiction)):
        return frozenset()
    return atoms_of(formula.left) | atoms_of(formula.right)


def atom_count(*formulas: Formula) -> int:
    ids: set[int] = set()
    for f in formulas:
        ids |= atoms_of(f)
    if not ids:
        return 0
    return max(ids) + 1


def assignments(k: int) -> Iterator[dict[int, TruthValue]]:
    """All assignments over atoms 0..k-1, lexicographic with 0 < ? < 1."""
    if k > MAX_ATOMS:
        raise TooManyAtomsError(
            f"exhaustive checking is limited to {MAX_ATOMS} atoms, got {k}"
        )
    for values in itertools.product(VALUE_ORDER, repeat=k):
        yield dict(enumerate(values))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive implication or equivalence check.

    ``counterexample`` is the first failing assignment in lexicographic
    order (0 < ? < 1 per atom), or None when the relation holds.
    """

    holds: bool
    counterexample: dict[int, TruthValue] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _check(f: Formula, g: Formula, accept) -> CheckResult:
    for assignment in assignments(atom_count(f, g)):
        if not accept(evaluate(f, assignment), evaluate(g, assignment)):
            return CheckResult(False, assignment)
    return CheckResult(True)


def logically_implies(f: Formula, g: Formula) -> CheckResult:
    """Whether the material conditional f -> g is true under every assignment."""
    return _check(f, g, lambda a, b: material_implies(a, b) is TRUE)


def logically_equivalent(f: Formula, g: Formula) -> CheckResult:
    """Whether f and g have identical truth tables."""
    return _check(f, g, lambda a, b: a is b)


def _counterexamples(f: Formula, g: Formula, accept) -> list["Counterexample"]:
    found = []
    for assignment in assignments(atom_count(f, g)):
        a, b = evaluate(f, assignment), evaluate(g, assignment)
        if not accept(a, b):
            found.append(Counterexample(tuple(sorted(assignment.items())), a, b))
    return found


# --------------------------------------------------------------------------
# Law catalogue

_P, _Q, _R = Atom(0), Atom(1), Atom(2)


@dataclass(frozen=True)
class Law:
    law_id: str
    name: str
    kind: str  # "equivalence" | "implication"
    parts: tuple[tuple[Formula, Formula], ...]


LAWS: tuple[Law, ...] = (
    Law("E1", "Double negation", "equivalence", ((Not(Not(_P)), _P),)),
    Law(
        "E2",
        "De Morgan's laws",
        "equivalence",
        (
            (Not(And(_P, _Q)), Or(Not(_P), Not(_Q))),
            (Not(Or(_P, _Q)), And(Not(_P), Not(_Q))),
        ),
    ),
    Law(
        "E3",
        "Commutative laws",
        "equivalence",
        ((And(_P, _Q), And(_Q, _P)), (Or(_P, _Q), Or(_Q, _P))),
    ),
    Law(
        "E4",
        "Associative laws",
        "equivalence",
        (
            (And(_P, And(_Q, _R)), And(And(_P, _Q), _R)),
            (Or(_P, Or(_Q, _R)), Or(Or(_P, _Q), _R)),
        ),
    ),
    Law(
        "E5",
        "Distributive laws",
        "equivalence",
        (
            (And(_P, Or(_Q, _R)), Or(And(_P, _Q), And(_P, _R))),
            (Or(_P, And(_Q, _R)), And(Or(_P, _Q), Or(_P, _R))),
        ),
    ),
    Law(
        "E6",
        "Idempotence",
        "equivalence",
        ((And(_P, _P), _P), (Or(_P, _P), _P)),
    ),
    Law(
        "E7",
        "Identity laws",
        "equivalence",
        ((And(_P, TAUTOLOGY), _P), (Or(_P, CONTRADICTION), _P)),
    ),
    Law(
        "E8",
        "Domination laws",
        "equivalence",
        (
            (And(_P, CONTRADICTION), CONTRADICTION),
            (Or(_P, TAUTOLOGY), TAUTOLOGY),
        ),
    ),
    Law(
        "E9",
        "Inverse laws",
        "equivalence",
        ((And(_P, Not(_P)), CONTRADICTION), (Or(_P, Not(_P)), TAUTOLOGY)),
    ),
    Law(
        "E10",
        "Absorption laws",
        "equivalence",
        ((And(_P, Or(_P, _Q)), _P), (Or(_P, And(_P, _Q)), _P)),
    ),
    Law("E11", "Implication law", "equivalence", ((Implies(_P, _Q), Or(Not(_P), _Q)),)),
    Law(
        "E12",
        "Contrapositive law",
        "equivalence",
        ((Implies(_P, _Q), Implies(Not(_Q), Not(_P))),),
    ),
    Law(
        "E13",
        "Equivalence law",
        "equivalence",
        ((Iff(_P, _Q), And(Implies(_P, _Q), Implies(_Q, _P))),),
    ),
    Law("I1", "Modus ponens", "implication", ((And(Implies(_P, _Q), _P), _Q),)),
    Law(
        "I2",
        "Law of syllogism",
        "implication",
        ((And(Implies(_P, _Q), Implies(_Q, _R)), Implies(_P, _R)),),
    ),
    Law(
        "I3",
        "Modus tollens",
        "implication",
        ((And(Implies(_P, _Q), Not(_Q)), Not(_P)),),
    ),
    Law("I4", "Conjunctive simplification", "implication", ((And(_P, _Q), _P),)),
    Law("I5", "Disjunctive amplification", "implication", ((_P, Or(_P, _Q)),)),
    Law(
        "I6",
        "Disjunctive syllogism",
        "implication",
        ((And(Or(_P, _Q), Not(_Q)), _P),),
    ),
    Law(
        "I7",
        "Proof by contradiction",
        "implication",
        ((Implies(Not(_P), CONTRADICTION), _P),),
    ),
    Law(
        "I8",
        "Proof by cases",
        "implication",
        ((And(Implies(_P, _R), Implies(_Q, _R)), Implies(Or(_P, _Q), _R)),),
    ),
)


@dataclass(frozen=True)
class Counterexample:
    assignment: tuple[tuple[int, TruthValue], ...]
    lhs: TruthValue
    rhs: TruthValue

    def named_assignment(self) -> dict[str, str]:
        return {ATOM_NAMES[i]: str(v) for i, v in self.assignment}


@dataclass(frozen=True)
class PartResult:
    lhs: Formula
    rhs: Formula
    holds: bool
    counterexamples: tuple[Counterexample, ...]


@dataclass(frozen=True)
class LawResult:
    law_id: str
    name: str
    kind: str
    holds: bool
    parts: tuple[PartResult, ...]

    def all_counterexamples(self) -> tuple[Counterexample, ...]:
        return tuple(c for part in self.parts for c in part.counterexamples)


@dataclass(frozen=True)
class LawReport:
    results: tuple[LawResult, ...]

    def __iter__(self):
        return iter(self.results)

    def result(self, law_id: str) -> LawResult:
        for r in self.results:
            if r.law_id == law_id:
                return r
        raise KeyError(law_id)

    def to_json_list(self) -> list[dict]:
        out = []
        for r in self.results:
            out.append(
                {
                    "law_id": r.law_id,
                    "name": r.name,
                    "holds": r.holds,
                    "counterexamples": [
                        {
                            "atom_values": c.named_assignment(),
                            "lhs": str(c.lhs),
                            "rhs": str(c.rhs),
                        }
                        for c in r.all_counterexamples()
                    ],
                }
            )
        return out

    def to_text(self) -> str:
        lines = [f"{'law':<5}{'name':<30}{'verdict':<9}counterexamples"]
        for r in self.results:
            ces = "; ".join(
                ",".join(f"{k}={v}" for k, v in c.named_assignment().items())
                for c in r.all_counterexamples()
            )
            verdict = "holds" if r.holds else "FAILS"
            lines.append(f"{r.law_id:<5}{r.name:<30}{verdict:<9}{ces or '-'}")
        return "\n".join(lines)


def law_suite() -> LawReport:
    """Check every catalogued law exhaustively and report verdicts.

    A law with several parts holds only when every part does.  For failing
    laws the complete counterexample set is collected, in lexicographic
    assignment order.
    """
    results = []
    for law in LAWS:
        accept = (
            (lambda a, b: a is b)
            if law.kind == "equivalence"
            else (lambda a, b: material_implies(a, b) is TRUE)
        )
        parts = []
        for lhs, rhs in law.parts:
            ces = tuple(_counterexamples(lhs, rhs, accept))
            parts.append(PartResult(lhs, rhs, not ces, ces))
        results.append(
            LawResult(law.law_id, law.name, law.kind, all(p.holds for p in parts), tuple(parts))
        )
    return LawReport(tuple(results))


# --------------------------------------------------------------------------
# Formula text syntax
#
#   iff     := implies ('<->' implies)*
#   implies := or ('->' implies)?          (right associative)
#   or      := xor ('|' xor)*
#   xor     := and ('^' and)*
#   and     := unary ('&' unary)*
#   unary   := '!' unary | '(' iff ')' | 'T' | 'F' | name
#
# Unicode aliases: NOT ¬ ~, AND ∧, OR ∨, XOR ⊻, IMPLIES →, IFF ↔.

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<iff><->|↔)|(?P<implies>->|→)|(?P<or>\||∨)|(?P<xor>\^|⊻)"
    r"|(?P<and>&|∧)|(?P<not>!|¬|~)|(?P<lparen>\()|(?P<rparen>\))"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*))"
)


class _FormulaParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.index = 0
        self.atom_ids: dict[str, int] = {}

    def _tokenize(self) -> None:
        pos = 0
        while pos < len(self.text):
            m = _TOKEN_RE.match(self.text, pos)
            if m is None or m.end() == pos:
                stripped = self.text[pos:].lstrip()
                if not stripped:
                    break
                at = len(self.text) - len(stripped)
                raise FormulaParseError(at, f"unexpected character {stripped[0]!r}")
            kind = m.lastgroup
            assert kind is not None
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self, kind: str) -> bool:
        tok = self._peek()
        if tok is not None and tok[0] == kind:
            self.index += 1
            return True
        return False

    def parse(self) -> tuple[Formula, tuple[str, ...]]:
        f = self._iff()
        tok = self._peek()
        if tok is not None:
            raise FormulaParseError(tok[2], f"unexpected token {tok[1]!r}")
        names = tuple(sorted(self.atom_ids, key=self.atom_ids.get))
        return f, names

    def _iff(self) -> Formula:
        f = self._implies()
        while self._take("iff"):
            f = Iff(f, self._implies())
        return f

    def _implies(self) -> Formula:
        f = self._or()
        if self._take("implies"):
            return Implies(f, self._implies())
        return f

    def _or(self) -> Formula:
        f = self._xor()
        while self._take("or"):
            f = Or(f, self._xor())
        return f

    def _xor(self) -> Formula:
        f = self._and()
        while self._take("xor"):
            f = Xor(f, self._and())
        return f

    def _and(self) -> Formula:
        f = self._unary()
        while self._take("and"):
            f = And(f, self._unary())
        return f

    def _unary(self) -> Formula:
        tok = self._peek()
        if tok is None:
            raise FormulaParseError(len(self.text), "unexpected end of formula")
        kind, value, at = tok
        if kind == "not":
            self.index += 1
            return Not(self._unary())
        if kind == "lparen":
            self.index += 1
            f = self._iff()
            if not self._take("rparen"):
                raise FormulaParseError(at, "unbalanced parenthesis")
            return f
        if kind == "name":
            self.index += 1
            if value == "T":
                return TAUTOLOGY
            if value == "F":
                return CONTRADICTION
            if value not in self.atom_ids:
                if len(self.atom_ids) >= MAX_ATOMS:
                    raise TooManyAtomsError(
                        f"formulas are limited to {MAX_ATOMS} distinct atoms"
                    )
                self.atom_ids[value] = len(self.atom_ids)
            return Atom(self.atom_ids[value])
        raise FormulaParseError(at, f"unexpected token {value!r}")


def parse_formula(text: str) -> tuple[Formula, tuple[str, ...]]:
    """Parse formula text; returns the AST and atom names in id order.

    Atoms are assigned contiguous ids in order of first appearance.  ``T``
    and ``F`` denote the constant true and false formulas.
    """
    return _FormulaParser(text).parse()


def format_formula(formula: Formula, names: tuple[str, ...] = ATOM_NAMES) -> str:
    """Render a formula with unicode connectives and minimal parentheses."""

    def wrap(f: Formula) -> str:
        if isinstance(f, (Atom, Not, Tautology, Contradiction)):
            return fmt(f)
        return f"({fmt(f)})"

    def fmt(f: Formula) -> str:
        if isinstance(f, Atom):
            return names[f.index]
        if isinstance(f, Not):
            return f"¬{wrap(f.operand)}"
        if isinstance(f, Tautology):
            return "T"
        if isinstance(f, Contradiction):
            return "F"
        symbol = {And: "∧", Or: "∨", Xor: "⊻", Implies: "→", Iff: "↔"}[type(f)]
        return f"{wrap(f.left)}{symbol}{wrap(f.right)}"

    return fmt(formula)

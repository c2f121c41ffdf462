"""Transformations of propositions: axis flips, phase rotation, Hadamard, CZ.

Every transformation maps signed letter strings to signed letter strings and
preserves compatibility.  The single-system rules are:

    flip X:  X -> X,   Y -> -Y,  Z -> -Z
    flip Y:  X -> -X,  Y -> Y,   Z -> -Z
    flip Z:  X -> -X,  Y -> -Y,  Z -> Z
    S    (quantum):  X -> Y,  Y -> -X,  Z -> Z
    S    (toy):      X -> Y,  Y -> -X,  Z -> -Z
    H    (quantum):  X <-> Z, Y -> -Y
    H    (toy):      X <-> Z, Y -> Y

The two-system CZ is shared by both theory variants; its standard form maps
``XX -> YY`` while the alternative ("tilde") form maps ``XX -> -YY``.  On bit
level every gate is a sparse update of the packed x/z vectors plus a sign
rule, so long gate sequences are stored as *passes*: batches of commuting
equal-kind gates encoded by a target bit mask.  A :class:`Transcript` is an
invertible sequence of such passes and materialises to plain gates on demand.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatchError, FormulaParseError
from .pauli import Proposition


class TheoryVariant(enum.Enum):
    """Which pair of S/H sign rules is in force."""

    QUANTUM = "quantum"
    SPEKKENS_TOY = "toy"


class CzChoice(enum.Enum):
    """Standard CZ (``XX -> YY``) or the alternative tilde form (``XX -> -YY``)."""

    STANDARD = "standard"
    TILDE = "tilde"


GATE_KINDS = ("X", "Y", "Z", "S", "SINV", "H", "CZ")

_SELF_INVERSE = {"X", "Y", "Z", "H", "CZ"}
_INVERSE_KIND = {"S": "SINV", "SINV": "S"}


@dataclass(frozen=True)
class Gate:
    """A single gate: an axis flip, S, S^-1 or H at one system, or CZ at a pair.

    Targets are 0-based internally; the text form uses 1-based indices.
    """

    kind: str
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == "CZ":
            if len(self.targets) != 2 or self.targets[0] == self.targets[1]:
                raise ValueError("CZ needs two distinct targets")
        elif len(self.targets) != 1:
            raise ValueError(f"{self.kind} takes exactly one target")
        if any(t < 0 for t in self.targets):
            raise ValueError("targets must be non-negative")

    def inverse(self) -> "Gate":
        return Gate(_INVERSE_KIND.get(self.kind, self.kind), self.targets)

    def to_text(self) -> str:
        if self.kind == "CZ":
            i, j = self.targets
            return f"CZ@({i + 1},{j + 1})"
        return f"{self.kind}@{self.targets[0] + 1}"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "targets": [t + 1 for t in self.targets]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Gate":
        return cls(str(data["kind"]).upper(), tuple(int(t) - 1 for t in data["targets"]))


def _iter_bits(mask: int, descending: bool = False) -> Iterator[int]:
    if descending:
        while mask:
            b = mask.bit_length() - 1
            yield b
            mask ^= 1 << b
    else:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low


@dataclass(frozen=True)
class PassOp:
    """A batch of commuting same-kind gates: one bit per target in ``mask``.

    For ``CZ`` the shared system is ``pivot`` and ``mask`` holds the partner
    positions.  ``descending`` controls the order in which the batch
    materialises to individual gates (used by inverted transcripts).
    """

    kind: str
    mask: int
    pivot: int = -1
    descending: bool = False

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == "CZ":
            if self.pivot < 0:
                raise ValueError("CZ pass needs a pivot")
            if self.mask >> self.pivot & 1:
                raise ValueError("CZ pivot cannot be one of its partners")
        if self.mask < 0:
            raise ValueError("mask must be non-negative")

    def gates(self) -> Iterator[Gate]:
        for b in _iter_bits(self.mask, self.descending):
            if self.kind == "CZ":
                yield Gate("CZ", (self.pivot, b))
            else:
                yield Gate(self.kind, (b,))

    def gate_count(self) -> int:
        return self.mask.bit_count()

    def inverse(self) -> "PassOp":
        return PassOp(
            _INVERSE_KIND.get(self.kind, self.kind),
            self.mask,
            self.pivot,
            not self.descending,
        )

    def max_target(self) -> int:
        top = self.mask.bit_length() - 1
        return max(top, self.pivot)


class Transcript:
    """An ordered, invertible gate sequence, stored as passes.

    Equality and iteration are defined on the materialised gate list, so two
    transcripts that batch the same gates differently still compare equal.
    """

    __slots__ = ("ops", "_steps")

    def __init__(self, ops: Iterable[PassOp] = ()):
        object.__setattr__(self, "ops", tuple(op for op in ops if op.mask))
        object.__setattr__(self, "_steps", None)

    @classmethod
    def from_gates(cls, gates: Iterable[Gate]) -> "Transcript":
        ops = []
        for g in gates:
            if g.kind == "CZ":
                i, j = g.targets
                ops.append(PassOp("CZ", 1 << j, i))
            else:
                ops.append(PassOp(g.kind, 1 << g.targets[0]))
        return cls(ops)

    @property
    def steps(self) -> tuple[Gate, ...]:
        if self._steps is None:
            object.__setattr__(
                self, "_steps", tuple(g for op in self.ops for g in op.gates())
            )
        return self._steps

    def gate_count(self) -> int:
        return sum(op.gate_count() for op in self.ops)

    def __len__(self) -> int:
        return self.gate_count()

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.steps)

    def __eq__(self, other) -> bool:
        if isinstance(other, Transcript):
            return self.steps == other.steps
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.steps)

    def __repr__(self) -> str:
        return f"Transcript({self.to_text()!r})"

    def inverted(self) -> "Transcript":
        return Transcript(op.inverse() for op in reversed(self.ops))

    def apply(
        self,
        p: Proposition,
        variant: TheoryVariant,
        cz: CzChoice = CzChoice.STANDARD,
    ) -> Proposition:
        """Apply the whole sequence to one proposition (pass-batched)."""
        x, z, s = p.x, p.z, p.sign
        for op in self.ops:
            if op.max_target() >= p.n:
                raise DimensionMismatchError(
                    f"gate target out of range for n={p.n}"
                )
            x, z, s = _apply_pass_bits(x, z, s, op, variant, cz)
        return Proposition(p.n, x, z, s)

    def to_text(self) -> str:
        return "; ".join(g.to_text() for g in self.steps)

    def to_json_list(self) -> list[dict]:
        return [g.to_json_dict() for g in self.steps]

    @classmethod
    def from_json_list(cls, data: list[dict]) -> "Transcript":
        return cls.from_gates(Gate.from_json_dict(d) for d in data)


_GATE_TEXT_RE = re.compile(
    r"^(?P<kind>[A-Za-z]+)@(?:\((?P<i>\d+),(?P<j>\d+)\)|(?P<k>\d+))$"
)


def parse_transcript(text: str) -> Transcript:
    """Parse the ``S@2; H@1; CZ@(1,2)`` form (1-based indices)."""
    gates = []
    offset = 0
    for chunk in text.split(";"):
        token = chunk.strip()
        if not token:
            offset += len(chunk) + 1
            continue
        m = _GATE_TEXT_RE.match(token)
        at = offset + chunk.index(token[0])
        if m is None:
            raise FormulaParseError(at, f"bad gate token {token!r}")
        kind = m.group("kind").upper()
        if kind not in GATE_KINDS:
            raise FormulaParseError(at, f"unknown gate kind {kind!r}")
        if m.group("k") is not None:
            if kind == "CZ":
                raise FormulaParseError(at, "CZ needs a target pair")
            target = int(m.group("k"))
            if target < 1:
                raise FormulaParseError(at, "indices are 1-based")
            gates.append(Gate(kind, (target - 1,)))
        else:
            if kind != "CZ":
                raise FormulaParseError(at, f"{kind} takes a single target")
            i, j = int(m.group("i")), int(m.group("j"))
            if min(i, j) < 1:
                raise FormulaParseError(at, "indices are 1-based")
            gates.append(Gate("CZ", (i - 1, j - 1)))
        offset += len(chunk) + 1
    return Transcript.from_gates(gates)


# --------------------------------------------------------------------------
# Bit-level application


def apply_gate(
    p: Proposition,
    gate: Gate,
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
) -> Proposition:
    """Apply one gate, returning a new proposition.

    This is the reference single-gate path; the batched pass and tableau
    paths must agree with it observationally.
    """
    n, x, z, s = p.n, p.x, p.z, p.sign
    quantum = variant is TheoryVariant.QUANTUM
    if gate.kind == "CZ":
        i, j = gate.targets
        if i >= n or j >= n:
            raise DimensionMismatchError(f"gate target out of range for n={n}")
        xi, zi = x >> i & 1, z >> i & 1
        xj, zj = x >> j & 1, z >> j & 1
        parity = zi ^ zj
        if cz is CzChoice.TILDE:
            parity ^= 1
        s ^= xi & xj & parity
        z ^= xj << i
        z ^= xi << j
        return Proposition(n, x, z, s)
    (i,) = gate.targets
    if i >= n:
        raise DimensionMismatchError(f"gate target out of range for n={n}")
    xi, zi = x >> i & 1, z >> i & 1
    kind = gate.kind
    if kind == "X":
        s ^= zi
    elif kind == "Y":
        s ^= xi ^ zi
    elif kind == "Z":
        s ^= xi
    elif kind == "S":
        s ^= (xi & zi) if quantum else zi
        z ^= xi << i
    elif kind == "SINV":
        s ^= (xi & (zi ^ 1)) if quantum else (xi ^ zi)
        z ^= xi << i
    else:  # H
        if quantum:
            s ^= xi & zi
        swap = (xi ^ zi) << i
        x ^= swap
        z ^= swap
    return Proposition(n, x, z, s)


def _apply_pass_bits(
    x: int,
    z: int,
    s: int,
    op: PassOp,
    variant: TheoryVariant,
    cz: CzChoice,
) -> tuple[int, int, int]:
    """Pass application on packed integers; one popcount per sign term.

    The aggregate CZ sign rule folds the sequential pivot updates into a
    closed form: with ``a`` the pivot x bit, ``c`` the number of partner x
    bits and ``v`` the initial pivot z bit, the total sign flip is
    ``a & ((c&1)&(K^v) ^ (c>>1)&1 ^ parity(x&z&mask))`` where ``K`` is 1 for
    the tilde choice.
    """
    quantum = variant is TheoryVariant.QUANTUM
    mask = op.mask
    kind = op.kind
    if kind == "CZ":
        pvt = op.pivot
        a = x >> pvt & 1
        c = (x & mask).bit_count()
        v = z >> pvt & 1
        pi = (x & z & mask).bit_count() & 1
        k = 1 if cz is CzChoice.TILDE else 0
        s ^= a & (((c & 1) & (k ^ v)) ^ (c >> 1 & 1) ^ pi)
        z ^= (c & 1) << pvt
        if a:
            z ^= mask
    elif kind == "S":
        s ^= ((x & z & mask) if quantum else (z & mask)).bit_count() & 1
        z ^= x & mask
    elif kind == "SINV":
        s ^= ((x & ~z & mask) if quantum else ((x ^ z) & mask)).bit_count() & 1
        z ^= x & mask
    elif kind == "H":
        if quantum:
            s ^= (x & z & mask).bit_count() & 1
        swap = (x ^ z) & mask
        x ^= swap
        z ^= swap
    elif kind == "X":
        s ^= (z & mask).bit_count() & 1
    elif kind == "Y":
        s ^= ((x ^ z) & mask).bit_count() & 1
    else:  # Z
        s ^= (x & mask).bit_count() & 1
    return x, z, s


def apply_transcript(
    p: Proposition,
    transcript: Transcript,
    variant: TheoryVariant,
    cz: CzChoice = CzChoice.STANDARD,
) -> Proposition:
    """Left-to-right fold of :func:`apply_gate` over the transcript's gates."""
    for gate in transcript.steps:
        p = apply_gate(p, gate, variant, cz)
    return p


def invert_gate(gate: Gate) -> Gate:
    """S and SINV swap; flips, H and CZ are self-inverse."""
    return gate.inverse()


def invert_transcript(transcript: Transcript) -> Transcript:
    """Reverse the order and invert every gate."""
    return transcript.inverted()


def cnot(control: int, target: int) -> Transcript:
    """The derived controlled-NOT: H at the target, CZ, H at the target."""
    if control == target:
        raise ValueError("CNOT needs distinct systems")
    return Transcript.from_gates(
        [Gate("H", (target,)), Gate("CZ", (control, target)), Gate("H", (target,))]
    )

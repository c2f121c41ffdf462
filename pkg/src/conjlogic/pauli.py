"""Signed Pauli-string propositions in packed symplectic form.

A proposition over ``n`` systems is a letter string drawn from ``I X Y Z``
plus a sign bit: ``<ZX>`` asserts that the joint measurement answers 0,
``<-ZX>`` that it answers 1.  Letters are stored as two bit-vectors packed
into Python integers, bit ``i`` describing system ``i``: ``I=(x0,z0)``,
``X=(1,0)``, ``Z=(0,1)``, ``Y=(1,1)``.  Two propositions are compatible
exactly when the number of positions carrying distinct nontrivial letters
is even, i.e. when their symplectic product vanishes; signs never matter
for compatibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, PropParseError

_BITS_TO_LETTER = ("I", "X", "Z", "Y")  # index = x + 2z
_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class Proposition:
    """An immutable signed Pauli-string proposition.

    Attributes:
        n: number of systems (>= 1).
        x: packed X bits, bit ``i`` for system ``i``.
        z: packed Z bits.
        sign: 0 for the plain statement, 1 for its negation.
    """

    n: int
    x: int
    z: int
    sign: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one system, got n={self.n}")
        full = (1 << self.n) - 1
        if not 0 <= self.x <= full or not 0 <= self.z <= full:
            raise ValueError("letter bits exceed the declared system count")
        if self.sign not in (0, 1):
            raise ValueError(f"sign must be 0 or 1, got {self.sign}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_letters(cls, letters: str, sign: int = 0) -> "Proposition":
        """Build from a bare letter string such as ``"XIZ"``."""
        x = z = 0
        for i, ch in enumerate(letters):
            try:
                xb, zb = _LETTER_TO_BITS[ch]
            except KeyError:
                raise ValueError(f"invalid letter {ch!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(letters), x, z, sign)

    @classmethod
    def identity(cls, n: int, sign: int = 0) -> "Proposition":
        return cls(n, 0, 0, sign)

    @classmethod
    def single(cls, n: int, index: int, letter: str, sign: int = 0) -> "Proposition":
        """A proposition with one nontrivial ``letter`` at ``index`` (0-based)."""
        if not 0 <= index < n:
            raise DimensionMismatchError(f"index {index} out of range for n={n}")
        xb, zb = _LETTER_TO_BITS[letter]
        if not (xb | zb):
            raise ValueError("use Proposition.identity for the trivial string")
        return cls(n, xb << index, zb << index, sign)

    # -- accessors ---------------------------------------------------------

    @property
    def letters(self) -> str:
        return "".join(
            _BITS_TO_LETTER[(self.x >> i & 1) + 2 * (self.z >> i & 1)]
            for i in range(self.n)
        )

    def letter(self, index: int) -> str:
        return _BITS_TO_LETTER[(self.x >> index & 1) + 2 * (self.z >> index & 1)]

    def letter_bits(self, index: int) -> tuple[int, int]:
        return self.x >> index & 1, self.z >> index & 1

    @property
    def is_trivial(self) -> bool:
        return not (self.x | self.z)

    @property
    def weight(self) -> int:
        """Number of nontrivial letters."""
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> int:
        """Bit mask of nontrivial positions."""
        return self.x | self.z

    def negated(self) -> "Proposition":
        return Proposition(self.n, self.x, self.z, self.sign ^ 1)

    def with_sign(self, sign: int) -> "Proposition":
        return Proposition(self.n, self.x, self.z, sign)

    def __str__(self) -> str:
        return format_prop(self)

    def __repr__(self) -> str:
        return f"Proposition({format_prop(self)!r})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "letters": self.letters, "sign": self.sign}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Proposition":
        p = cls.from_letters(data["letters"], int(data["sign"]))
        if p.n != data["n"]:
            raise ValueError("letter string length disagrees with n")
        return p


def parse_prop(text: str, expected_n: int | None = None) -> Proposition:
    """Parse ``'<' sign? letter+ '>'`` with sign ``-`` or ``¬``.

    Raises PropParseError with the offending character position; if
    ``expected_n`` is given the letter count must match it.
    """
    if not text:
        raise PropParseError(0, "empty string", "empty proposition")
    if text[0] != "<":
        raise PropParseError(0, "malformed sign", "proposition must start with '<'")
    if len(text) < 2 or text[-1] != ">":
        raise PropParseError(
            len(text) - 1, "malformed sign", "proposition must end with '>'"
        )
    body_start = 1
    sign = 0
    if text[1] in "-¬":
        sign = 1
        body_start = 2
    body = text[body_start:-1]
    if not body:
        raise PropParseError(body_start, "empty string", "no letters between brackets")
    x = z = 0
    for offset, ch in enumerate(body):
        bits = _LETTER_TO_BITS.get(ch)
        if bits is None:
            raise PropParseError(
                body_start + offset, "bad letter", f"invalid letter {ch!r}"
            )
        x |= bits[0] << offset
        z |= bits[1] << offset
    n = len(body)
    if expected_n is not None and n != expected_n:
        raise PropParseError(
            len(text) - 1,
            "length mismatch",
            f"expected {expected_n} letters, got {n}",
        )
    return Proposition(n, x, z, sign)


def format_prop(p: Proposition) -> str:
    """Canonical text form; inverse of parse_prop.  Sign 1 renders as ``<-...>``."""
    return f"<{'-' if p.sign else ''}{p.letters}>"


def compatible(p: Proposition, q: Proposition) -> bool:
    """Whether the two strings commute symplectically (signs are ignored)."""
    if p.n != q.n:
        raise DimensionMismatchError(
            f"propositions describe {p.n} and {q.n} systems"
        )
    return ((p.x & q.z) ^ (p.z & q.x)).bit_count() % 2 == 0


def negate_prop(p: Proposition) -> Proposition:
    """Same letter string with the opposite sign."""
    return p.negated()


def weight(p: Proposition) -> int:
    """Number of nontrivial letters in the string."""
    return p.weight

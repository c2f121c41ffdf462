"""Independent oracles used to cross-check the symplectic implementation.

Everything here works on dense matrices or explicit letter arithmetic and
deliberately shares no code with the package's bit-level paths.
"""

from __future__ import annotations

import numpy as np

from conjlogic import Gate, Proposition

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_SINGLE_UNITARY = {
    "X": _PAULI["X"],
    "Y": _PAULI["Y"],
    "Z": _PAULI["Z"],
    "S": np.diag([1, 1j]).astype(complex),
    "SINV": np.diag([1, -1j]).astype(complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
}


def prop_matrix(p: Proposition) -> np.ndarray:
    m = np.array([[1]], dtype=complex)
    for letter in p.letters:
        m = np.kron(m, _PAULI[letter])
    return -m if p.sign else m


def gate_unitary(gate: Gate, n: int) -> np.ndarray:
    if gate.kind == "CZ":
        i, j = gate.targets
        diag = np.ones(2**n, dtype=complex)
        for b in range(2**n):
            # basis label bit for system t is bit (n-1-t) under kron ordering
            bi = b >> (n - 1 - i) & 1
            bj = b >> (n - 1 - j) & 1
            if bi and bj:
                diag[b] = -1
        return np.diag(diag)
    (t,) = gate.targets
    m = np.array([[1]], dtype=complex)
    for pos in range(n):
        m = np.kron(m, _SINGLE_UNITARY[gate.kind] if pos == t else _PAULI["I"])
    return m


def conjugate_oracle(p: Proposition, gate: Gate) -> Proposition:
    """U M U^dagger decomposed back into a signed letter string."""
    u = gate_unitary(gate, p.n)
    m = u @ prop_matrix(p) @ u.conj().T
    dim = 2**p.n
    letters_pool = "IXYZ"
    for code in range(4**p.n):
        letters = ""
        c = code
        for _ in range(p.n):
            letters += letters_pool[c & 3]
            c >>= 2
        candidate = prop_matrix(Proposition.from_letters(letters))
        coeff = np.trace(candidate.conj().T @ m) / dim
        if abs(coeff) > 0.5:
            sign = 0 if coeff.real > 0 else 1
            assert np.allclose(m, candidate if sign == 0 else -candidate)
            return Proposition.from_letters(letters, sign)
    raise AssertionError("conjugation did not yield a signed letter string")


# -- phase-tracked multiplication ------------------------------------------


def _i_exponent(x1: int, z1: int, x2: int, z2: int) -> int:
    """Power of i picked up when multiplying single letters (left * right)."""
    if (x1 | z1) == 0 or (x2 | z2) == 0:
        return 0
    if x1 == 1 and z1 == 1:  # Y * ...
        return z2 - x2
    if x1 == 1:  # X * ...
        return z2 * (2 * x2 - 1)
    return x2 * (1 - 2 * z2)  # Z * ...


def prop_product(p: Proposition, q: Proposition) -> Proposition:
    """Matrix product of two signed commuting strings, as a signed string."""
    total = 2 * p.sign + 2 * q.sign
    for i in range(p.n):
        total += _i_exponent(*p.letter_bits(i), *q.letter_bits(i))
    total %= 4
    assert total % 2 == 0, "operands anticommute"
    return Proposition(p.n, p.x ^ q.x, p.z ^ q.z, total // 2)


def multiplication_closure(generators: list[Proposition], n: int) -> set[Proposition]:
    """The signed strings generated under matrix multiplication."""
    span = {Proposition.identity(n)}
    for g in generators:
        span |= {prop_product(e, g) for e in span}
    return span


def naive_compatible(p: Proposition, q: Proposition) -> bool:
    """Letter-by-letter count of differing nontrivial positions."""
    differing = 0
    for i in range(p.n):
        a, b = p.letter(i), q.letter(i)
        if a != "I" and b != "I" and a != b:
            differing += 1
    return differing % 2 == 0

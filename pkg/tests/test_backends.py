import random

import numpy as np
import pytest

from conjlogic import CzChoice, Proposition, Transcript, apply_transcript, backend
from conjlogic.bench import random_state_generators, random_transcript
from conjlogic.clifford import PassOp, TheoryVariant
from conjlogic.tableau import ExpansionBatch, ReductionTableau, int_to_words, words_to_int

from conftest import random_prop

Q = TheoryVariant.QUANTUM
TOY = TheoryVariant.SPEKKENS_TOY
VARIANTS = (Q, TOY)
CHOICES = (CzChoice.STANDARD, CzChoice.TILDE)


def _random_pass(rng, n):
    kind = rng.choice(("X", "Y", "Z", "S", "SINV", "H", "CZ"))
    if kind == "CZ":
        pivot = rng.randrange(n)
        mask = rng.getrandbits(n) & ~(1 << pivot)
        return PassOp(kind, mask, pivot)
    return PassOp(kind, rng.getrandbits(n))


def test_word_conversion_round_trip(rng):
    for _ in range(200):
        words = rng.randrange(1, 5)
        value = rng.getrandbits(words * 64 - rng.randrange(0, 63))
        assert words_to_int(int_to_words(value, words)) == value


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("cz", CHOICES)
def test_row_passes_match_single_prop_path(kernels, variant, cz, rng):
    for _ in range(60):
        n = rng.randrange(1, 140)
        props = [random_prop(rng, n) for _ in range(rng.randrange(1, 7))]
        ops = [_random_pass(rng, n) for _ in range(rng.randrange(1, 12))]
        tab = ReductionTableau(props, kernels)
        for op in ops:
            tab.apply(op, variant, cz)
        expected = [Transcript(ops).apply(p, variant, cz) for p in props]
        assert [tab.proposition(r) for r in range(tab.nrows)] == expected


def test_row_xor(kernels, rng):
    for _ in range(50):
        n = rng.randrange(1, 100)
        a, b = random_prop(rng, n), random_prop(rng, n)
        tab = ReductionTableau([a, b], kernels)
        tab.xor_rows(0, 1)
        merged = tab.proposition(0)
        assert (merged.x, merged.z, merged.sign) == (
            a.x ^ b.x,
            a.z ^ b.z,
            a.sign ^ b.sign,
        )
        assert tab.proposition(1) == b


def test_bit_transpose_round_trip(kernels, rng):
    for _ in range(40):
        rows = rng.randrange(1, 200)
        bits = rng.randrange(1, 150)
        words = (bits + 63) // 64
        mat = np.array(
            [int_to_words(rng.getrandbits(bits), words) for _ in range(rows)]
        )
        t = kernels.bit_transpose(np.ascontiguousarray(mat), bits)
        assert t.shape == (bits, (rows + 63) // 64)
        back = kernels.bit_transpose(np.ascontiguousarray(t), rows)
        assert back.shape == mat.shape
        assert (back == mat).all()


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("cz", CHOICES)
def test_batch_replay_matches_per_prop_application(kernels, variant, cz, rng):
    for _ in range(40):
        n = rng.randrange(1, 70)
        props = [random_prop(rng, n) for _ in range(rng.randrange(1, 90))]
        ops = [_random_pass(rng, n) for _ in range(rng.randrange(0, 10))]
        t = Transcript(ops)
        batch = ExpansionBatch.from_propositions(props, kernels)
        batch.replay(t, variant, cz)
        assert batch.propositions() == [t.apply(p, variant, cz) for p in props]


def test_batch_replay_matches_gate_fold(kernels, rng):
    for _ in range(25):
        n = rng.randrange(2, 20)
        props = [random_prop(rng, n) for _ in range(rng.randrange(1, 30))]
        t = Transcript([_random_pass(rng, n) for _ in range(6)])
        batch = ExpansionBatch.from_propositions(props, kernels)
        batch.replay(t, Q, CzChoice.STANDARD)
        assert batch.propositions() == [
            apply_transcript(p, t, Q, CzChoice.STANDARD) for p in props
        ]


def test_subset_space_patterns(kernels):
    batch = ExpansionBatch.subset_space(5, [4, 0, 2], [1, 0, 1], kernels)
    props = batch.propositions()
    assert len(props) == 8
    for r, p in enumerate(props):
        expected_x = 0
        expected_sign = 0
        for i, (pivot, sign) in enumerate(((4, 1), (0, 0), (2, 1))):
            if r >> i & 1:
                expected_x |= 1 << pivot
                expected_sign ^= sign
        assert (p.x, p.z, p.sign) == (expected_x, 0, expected_sign)


def test_backends_agree_on_random_workloads(rng):
    names = backend.available_backends()
    if len(names) < 2:
        pytest.skip("only one backend built")
    mods = [backend.get_backend(name) for name in names]
    for _ in range(40):
        n = rng.randrange(1, 130)
        props = [random_prop(rng, n) for _ in range(rng.randrange(1, 8))]
        ops = [_random_pass(rng, n) for _ in range(8)]
        variant = rng.choice(VARIANTS)
        cz = rng.choice(CHOICES)
        outcomes = []
        for mod in mods:
            tab = ReductionTableau(props, mod)
            for op in ops:
                tab.apply(op, variant, cz)
            outcomes.append([tab.proposition(r) for r in range(tab.nrows)])
        assert outcomes[0] == outcomes[1]


def test_random_state_generators_are_valid(kernels, rng):
    from conjlogic import compatible, independent

    for _ in range(25):
        n = rng.randrange(2, 40)
        k = rng.randrange(0, min(n, 9) + 1)
        gens = random_state_generators(n, k, rng, kernels=kernels)
        assert len(gens) == k
        assert independent(gens)
        for i in range(k):
            for j in range(i + 1, k):
                assert compatible(gens[i], gens[j])


def test_backend_selection_env(monkeypatch):
    assert backend.BACKEND_NAME in backend.available_backends()
    with pytest.raises(ValueError):
        backend.get_backend("nope")

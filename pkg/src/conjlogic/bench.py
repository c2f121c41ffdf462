"""Timing harness for the joint reduction and closure paths.

Valid random states are produced by placing single-X generators on distinct
positions and pushing them through a random transcript; the inverse
transform guarantees compatibility and independence.  The harness times
``reduce_set`` (and the closure when the generator count keeps 2^k small)
for each requested kernel backend.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from . import backend
from .clifford import CzChoice, PassOp, TheoryVariant, Transcript
from .knowledge import closure_of
from .pauli import Proposition
from .reduction import reduce_set
from .tableau import ExpansionBatch

#: Closure timing is skipped above this generator count (2^k members).
CLOSURE_BENCH_LIMIT = 20


def random_transcript(n: int, rng: random.Random, rounds: int = 8) -> Transcript:
    """Random pass sequence that spreads any sparse input across all systems.

    The opening block correlates every row with one pivot and then fans that
    pivot out over a random half of the positions, so even single-X inputs
    become dense; the remaining rounds mix letters and signs.
    """
    ops = []
    full = (1 << n) - 1
    pivot = rng.randrange(n)
    ops.append(PassOp("CZ", full & ~(1 << pivot), pivot))
    ops.append(PassOp("H", 1 << pivot))
    for _ in range(rounds):
        ops.append(PassOp("CZ", rng.getrandbits(n) & ~(1 << pivot), pivot))
        ops.append(PassOp("S", rng.getrandbits(n)))
        ops.append(PassOp("H", rng.getrandbits(n)))
        pivot = rng.randrange(n)
        ops.append(PassOp("CZ", rng.getrandbits(n) & ~(1 << pivot), pivot))
    return Transcript(ops)


def random_state_generators(
    n: int,
    k: int,
    rng: random.Random,
    variant: TheoryVariant = TheoryVariant.QUANTUM,
    cz: CzChoice = CzChoice.STANDARD,
    kernels=None,
) -> list[Proposition]:
    """A pairwise-compatible independent set of k propositions on n systems."""
    if k > n:
        raise ValueError(f"cannot place {k} independent generators on {n} systems")
    if k == 0:
        return []
    positions = rng.sample(range(n), k)
    singles = [
        Proposition.single(n, pos, "X", rng.getrandbits(1)) for pos in positions
    ]
    batch = ExpansionBatch.from_propositions(singles, kernels)
    batch.replay(random_transcript(n, rng), variant, cz)
    return batch.propositions()


@dataclass(frozen=True)
class BenchResult:
    backend: str
    n: int
    k: int
    reps: int
    reduce_median: float
    gate_count: int
    gates_per_second: float
    closure_median: float | None

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend,
            "n": self.n,
            "k": self.k,
            "reps": self.reps,
            "reduce_median_s": self.reduce_median,
            "gate_count": self.gate_count,
            "gates_per_second": self.gates_per_second,
            "closure_median_s": self.closure_median,
        }

    def to_text(self) -> str:
        closure = (
            f"{self.closure_median:.6f}s"
            if self.closure_median is not None
            else f"skipped (k > {CLOSURE_BENCH_LIMIT})"
        )
        return (
            f"backend={self.backend} n={self.n} k={self.k} reps={self.reps} "
            f"reduce_set median={self.reduce_median:.6f}s "
            f"gates={self.gate_count} throughput={self.gates_per_second:.3e} gates/s "
            f"closure median={closure}"
        )


def run_bench(
    n: int,
    k: int,
    reps: int,
    seed: int,
    variant: TheoryVariant = TheoryVariant.QUANTUM,
    cz: CzChoice = CzChoice.STANDARD,
    backends: tuple[str, ...] | None = None,
) -> list[BenchResult]:
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if reps < 1:
        raise ValueError("need at least one repetition")
    names = backends or (backend.BACKEND_NAME,)
    results = []
    for name in names:
        kernels = backend.get_backend(name)
        reduce_times = []
        closure_times = []
        gate_count = 0
        for rep in range(reps):
            rng = random.Random(f"{seed}:{rep}")
            generators = random_state_generators(n, k, rng, variant, cz, kernels)
            start = time.perf_counter()
            result = (
                reduce_set(generators, variant, cz, kernels=kernels)
                if generators
                else None
            )
            reduce_times.append(time.perf_counter() - start)
            if result is not None:
                gate_count = result.transcript.gate_count()
            if k <= CLOSURE_BENCH_LIMIT:
                start = time.perf_counter()
                closure_of(tuple(generators), n, variant, cz, kernels)
                closure_times.append(time.perf_counter() - start)
        reduce_median = statistics.median(reduce_times)
        results.append(
            BenchResult(
                name,
                n,
                k,
                reps,
                reduce_median,
                gate_count,
                gate_count / reduce_median if reduce_median > 0 else float("inf"),
                statistics.median(closure_times) if closure_times else None,
            )
        )
    return results

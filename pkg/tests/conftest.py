import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conjlogic import Proposition, backend, parse_prop


@pytest.fixture(params=backend.available_backends())
def kernels(request):
    return backend.get_backend(request.param)


@pytest.fixture
def rng():
    return random.Random(20240917)


def P(text: str) -> Proposition:
    """Shorthand: parse a single proposition literal."""
    return parse_prop(text)


def random_prop(rng: random.Random, n: int, nontrivial: bool = False) -> Proposition:
    while True:
        p = Proposition(n, rng.getrandbits(n), rng.getrandbits(n), rng.getrandbits(1))
        if not nontrivial or not p.is_trivial:
            return p

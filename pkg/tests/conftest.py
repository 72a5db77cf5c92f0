import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


CUBIC_SIZES = (4, 6, 8, 10)
RANDOM_CORPUS_SEED = 1000


def _random_corpus_specs() -> list[tuple[int, int, int]]:
    """(n, r, seed) for the 200 seeded random regular corpus graphs."""
    specs = []
    cubic_ns = (6, 8, 10, 12, 14)
    quartic_ns = (6, 7, 8)
    for i in range(120):
        specs.append((cubic_ns[i % len(cubic_ns)], 3, RANDOM_CORPUS_SEED + i))
    for i in range(80):
        specs.append((quartic_ns[i % len(quartic_ns)], 4, RANDOM_CORPUS_SEED + 500 + i))
    return specs


@pytest.fixture(scope="session")
def cubic_classes():
    from earpack.harness import enumerate_connected_regular

    out = []
    for n in CUBIC_SIZES:
        out.extend(enumerate_connected_regular(n, 3))
    return out


@pytest.fixture(scope="session")
def random_corpus():
    from earpack.harness import random_regular

    return [random_regular(n, r, seed) for n, r, seed in _random_corpus_specs()]

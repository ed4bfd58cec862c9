import sys
from functools import lru_cache
from pathlib import Path

from hypothesis import HealthCheck, settings

from invfield import load_fixture, run_pipeline

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "exact",
    max_examples=100,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")

# fixtures whose full pipeline (orbit ideal included) fits the budget
FULL = ["trivial", "c2", "c3_1d", "c3", "c5", "c7", "c9", "c3reg", "c4reg", "s3std", "q8"]


@lru_cache(maxsize=None)
def decomposition(name: str, order: str | None = None):
    return load_fixture(name).decomposition(order)


@lru_cache(maxsize=None)
def pipeline(name: str, order: str | None = None):
    spec = load_fixture(name)
    return run_pipeline(decomposition(name, order), order, orbit_ideal=spec.options.get("orbit_ideal", True))

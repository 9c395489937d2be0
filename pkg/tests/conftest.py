import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pathrw.env import circle_env, sample_env
from pathrw.generate import CIRCLE_WEIGHTS, GENERIC_WEIGHTS, random_term

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

SAMPLE = sample_env()
CIRCLE = circle_env()


def terms(env=SAMPLE, weights=GENERIC_WEIGHTS, max_depth=4, max_size=None):
    """Seed-driven strategy: hypothesis shrinks the seed, the generator does the rest."""
    return st.integers(0, 2**32 - 1).map(
        lambda s: random_term(env, max_depth, weights, seed=s, max_size=max_size))


def circle_terms(max_depth=4):
    return terms(CIRCLE, CIRCLE_WEIGHTS, max_depth)


@pytest.fixture
def env():
    return sample_env()


@pytest.fixture
def circle():
    return circle_env()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ARTIFACTS, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    lines = [RESULTS[k] for k in sorted(RESULTS, key=int)]
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    ARTIFACTS.mkdir(exist_ok=True)
    (ARTIFACTS / "acceptance.txt").write_text("\n".join(lines) + "\n")

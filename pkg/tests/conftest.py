import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fockgen.generator import normalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def real_targets(draw, max_M=8, min_M=0):
    M = draw(st.integers(min_M, max_M))
    vals = draw(
        st.lists(st.floats(-1, 1, allow_nan=False), min_size=M + 1, max_size=M + 1).filter(
            lambda v: np.linalg.norm(v) > 1e-3
        )
    )
    return normalize(vals)


def random_targets(count, max_M=8, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        M = int(rng.integers(0, max_M + 1))
        out.append(normalize(rng.normal(size=M + 1)))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split(".")[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

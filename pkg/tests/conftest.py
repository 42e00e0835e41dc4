import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

U32 = st.integers(min_value=0, max_value=0xFFFFFFFF)


@st.composite
def sorted_u32(draw, max_size=700, max_delta=0xFFFFFFFF):
    """Non-decreasing uint32 arrays built from random gaps."""
    gaps = draw(st.lists(st.integers(0, max_delta), max_size=max_size))
    values = np.cumsum(np.array(gaps, dtype=np.uint64), dtype=np.uint64)
    return np.minimum(values, 0xFFFFFFFF).astype(np.uint32)


# acceptance report -------------------------------------------------------------

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def acceptance_report():
    """Record ``(criterion, ok, detail)``; one PASS/FAIL line each is printed at the end."""

    def record(criterion, ok, detail):
        prev = ACCEPTANCE.get(criterion)
        if prev is not None:
            ok = ok and prev[0]
            detail = f"{prev[1]}; {detail}"
        ACCEPTANCE[criterion] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[criterion]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from topolab.topology import generate_from_subbasis

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def topologies(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return generate_from_subbasis(n, masks)


@st.composite
def topology_pairs(draw, max_total=7):
    t1 = draw(topologies(max_n=max_total - 1))
    t2 = draw(topologies(max_n=max_total - t1.n))
    return t1, t2


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

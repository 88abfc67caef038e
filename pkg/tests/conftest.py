import random

from hypothesis import settings, strategies as st

from dyckminors.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def small_graphs(draw, min_n=1, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def seeded(seed):
    return random.Random(seed)


# one line per acceptance criterion, printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, title, secs, budget in sorted(ACCEPTANCE):
        terminalreporter.write_line("criterion %2d: %s  %-62s %7.1fs (budget %ds)"
                                    % (num, "PASS" if ok else "FAIL", title, secs, budget))

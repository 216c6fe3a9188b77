from __future__ import annotations

from hypothesis import settings, strategies as st

from rankmatch import FieldSpec, Matrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = (2, 3, 5, 7)


@st.composite
def square_matrices(draw, min_n=1, max_n=4, primes=SMALL_PRIMES):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    return Matrix(FieldSpec(p), rows)


@st.composite
def alternating_matrices(draw, min_half=1, max_half=3, primes=SMALL_PRIMES):
    p = draw(st.sampled_from(primes))
    n = 2 * draw(st.integers(min_half, max_half))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(0, p - 1))
            rows[i][j], rows[j][i] = v, (-v) % p
    return Matrix(FieldSpec(p), rows)


@st.composite
def loop_graphs(draw, max_n=6, loops=True):
    n = draw(st.integers(1, max_n))
    cand = [(i, j) for i in range(1, n + 1) for j in range(i + (0 if loops else 1), n + 1)]
    chosen = draw(st.lists(st.sampled_from(cand), unique=True, max_size=len(cand))) if cand else []
    return n, [(i,) if i == j else (i, j) for i, j in chosen]


# one PASS/FAIL line per acceptance criterion, shown at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])

import hypothesis.strategies as st
from hypothesis import settings

from bouquet_petrial.rotation import SignedRotation

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def rotations(draw, min_n=0, max_n=7, signed=True):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations([k for k in range(1, n + 1) for _ in range(2)]))
    if signed:
        signs = draw(st.lists(st.sampled_from([1, -1]), min_size=2 * n, max_size=2 * n))
        word = [x * s for x, s in zip(word, signs)]
    return SignedRotation(tuple(word))


@st.composite
def rotations_with_subset(draw, min_n=0, max_n=7):
    r = draw(rotations(min_n=min_n, max_n=max_n))
    subset = draw(st.sets(st.sampled_from(r.labels))) if r.n else set()
    return r, subset


# one PASS/FAIL line per acceptance criterion in the terminal summary
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

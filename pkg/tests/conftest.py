"""Shared fixtures plus a terminal summary for the acceptance suite."""

import random

import pytest

from wfamax import core

_ACCEPTANCE_PREFIX = "test_criterion_"
_acceptance_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and report.outcome != "failed":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith(_ACCEPTANCE_PREFIX):
        # setup/teardown failures count as FAIL, a passing call as PASS
        current = _acceptance_outcomes.get(name)
        if current != "failed":
            _acceptance_outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        label = name[len(_ACCEPTANCE_PREFIX):].replace("_", " ")
        verdict = "PASS" if _acceptance_outcomes[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {label}: {verdict}")


def random_wfa(rng, n_states, alphabet_size, density=0.5):
    """Small random automaton with exact dyadic entries, for property loops.

    Unlike casestudy.gen_random_wfa this takes an externally owned rng and a
    free-form density, which the composition and equivalence tests need.
    """
    symbols = tuple(f"s{i}" for i in range(alphabet_size))

    def entry():
        if rng.random() < density:
            return core.rat(rng.randint(-64, 64), 16)
        return core.rat(0)

    transitions = {
        s: tuple(tuple(entry() for _ in range(n_states)) for _ in range(n_states))
        for s in symbols
    }
    initial = tuple(core.rat(rng.randint(-16, 16), 8) for _ in range(n_states))
    final = tuple(core.rat(rng.randint(-16, 16), 8) for _ in range(n_states))
    return core.make_wfa(symbols, initial, final, transitions)


def random_word(rng, alphabet_size, max_len, min_len=0):
    length = rng.randint(min_len, max_len)
    return tuple(rng.randrange(alphabet_size) for _ in range(length))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)

import random
import re
from math import gcd

import pytest

from nsres import from_generators

CRITERIA = range(1, 11)
_outcomes = {}


def random_semigroup(rng, max_m, min_m=2, spread=4):
    """A random numerical semigroup with multiplicity in [min_m, max_m]."""
    m = rng.randint(min_m, max_m)
    k = rng.randint(1, m - 1)
    gens = {m}
    for _ in range(k):
        gens.add(rng.randint(m + 1, spread * m + 1))
    while gcd(*gens) != 1:
        gens.add(rng.randint(m + 1, spread * m + 1))
    return from_generators(sorted(gens))


def random_semigroups(seed, count, max_m, **kw):
    rng = random.Random(seed)
    return [random_semigroup(rng, max_m, **kw) for _ in range(count)]


def scaled_partner(S, u=None):
    """<m, u*g, ...> with u = 1 mod m; lies on the same Kunz face as S."""
    m = S.multiplicity
    u = u or m + 1
    return from_generators([m] + [u * g for g in S.minimal_generators if g != m])


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)_", report.nodeid)
    if not match:
        return
    k = int(match.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _outcomes[k] = False
    else:
        _outcomes.setdefault(k, True)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in CRITERIA:
        if k in _outcomes:
            terminalreporter.write_line("criterion %d: %s" % (k, "PASS" if _outcomes[k] else "FAIL"))
        else:
            terminalreporter.write_line("criterion %d: NOT RUN" % k)

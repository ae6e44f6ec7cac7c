import random
from fractions import Fraction

import pytest

from jackwhittaker import cache


@pytest.fixture(autouse=True)
def _no_disk_cache():
    """Tests run with the disk cache off unless they switch it on themselves."""
    cache.set_cache_dir(None)
    yield
    cache.set_cache_dir(None)


def random_points(seed, count, names=("beta", "u"), signed=True, bound=10**6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        point = {}
        for n in names:
            x = Fraction(rng.randint(1, bound), rng.randint(1, bound))
            if signed and rng.random() < 0.5:
                x = -x
            point[n] = x
        out.append(point)
    return out


ACCEPTANCE_RESULTS: dict[int, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE_RESULTS[n] else 'FAIL'} criterion {n}")

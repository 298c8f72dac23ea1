import pytest

from linrs.field import field_build
from linrs.params import FieldParams


class NaiveField:
    """Schoolbook GF(p^m) on the same integer encoding, no tables.

    Used as an oracle: shares only the modulus with the implementation.
    """

    def __init__(self, p, m, modulus):
        self.p, self.m, self.f = p, m, list(modulus)
        self.q = p ** m

    def digits(self, x):
        return [(x // self.p ** i) % self.p for i in range(self.m)]

    def undigits(self, ds):
        return sum((c % self.p) * self.p ** i for i, c in enumerate(ds))

    def add(self, x, y):
        return self.undigits([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x):
        return self.undigits([-a for a in self.digits(x)])

    def mul(self, x, y):
        a, b, p, m = self.digits(x), self.digits(y), self.p, self.m
        prod = [0] * (2 * m - 1)
        for i in range(m):
            for j in range(m):
                prod[i + j] += a[i] * b[j]
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg] % p
            if c:
                for t in range(m + 1):
                    prod[deg - m + t] -= c * self.f[t]
        return self.undigits(prod[:m])

    def pow(self, x, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, x)
        return r


def naive_eval(F, a, d, x):
    acc = 0
    for j, aj in enumerate(a):
        acc = F.add(acc, F.mul(aj, F.pow(x, F.p ** (j * d))))
    return acc


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(p, m, d=1, k=1, modulus=None):
        key = (p, m, d, k, tuple(modulus) if modulus else None)
        if key not in cache:
            cache[key] = field_build(FieldParams(p, m, d, k), modulus)
        return cache[key]
    return get


@pytest.fixture
def naive():
    return NaiveField


ACCEPTANCE_LINES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[1:])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])

"""Validated parameter bundle ``(p, m, d, k)`` with derived ``e = gcd(m, d)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import ParameterError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**s``; raise ParameterError if q is not a prime power."""
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ParameterError(f"q = {q} is not a prime power")
    p = fs[0]
    s = 0
    while q > 1:
        q //= p
        s += 1
    return p, s


@dataclass(frozen=True)
class FieldParams:
    """Parameters of the code / Wenger graph family.

    ``e`` is derived and must not be passed.
    """

    p: int
    m: int
    d: int
    k: int
    e: int = field(init=False)

    def __post_init__(self):
        for name in ("p", "m", "d", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        if not is_prime(self.p):
            raise ParameterError(f"p must be prime, got {self.p}")
        if self.m < 1 or self.d < 1 or self.k < 1:
            raise ParameterError("m, d and k must be positive integers")
        object.__setattr__(self, "e", gcd(self.m, self.d))
        if self.k > self.m // self.e:
            raise ParameterError(
                f"k exceeds m/e = {self.m // self.e} (k={self.k}, m={self.m}, d={self.d})")

    @property
    def q(self) -> int:
        """Size of the big field, p**m."""
        return self.p ** self.m

    @property
    def qe(self) -> int:
        """Size of the subfield, p**e."""
        return self.p ** self.e

    @property
    def s(self) -> int:
        """Dimension of F_{p^m} over F_{p^e}."""
        return self.m // self.e

    def as_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "d": self.d, "k": self.k, "e": self.e}

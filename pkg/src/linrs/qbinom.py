"""Gaussian binomial coefficients and related q-analog identities.

Everything is exact Python integer arithmetic.  ``q`` may be any integer
>= 2; the formulas are polynomial in q, so prime-power-ness is not
enforced here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError


def _check_q(q: int) -> None:
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")


def gaussian_binom(n: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of F_q^n.

    Computed as the running product of (q^(n-j) - 1) / (q^(j+1) - 1); each
    partial product is itself a Gaussian binomial, so every division is
    exact.
    """
    _check_q(q)
    if i < 0 or i > n:
        return 0
    i = min(i, n - i)
    c = 1
    for j in range(i):
        c = c * (q ** (n - j) - 1) // (q ** (j + 1) - 1)
    return c


def gaussian_binom_recurrence(n: int, i: int, q: int) -> int:
    """Same value via the q-Pascal rule; slow, used as a cross-check."""
    _check_q(q)
    row = [1]
    for nn in range(1, n + 1):
        new = [1] * (nn + 1)
        for j in range(1, nn):
            new[j] = row[j - 1] + q ** j * row[j]
        row = new
    return row[i] if 0 <= i <= n else 0


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of F_q^n."""
    return sum(gaussian_binom(n, i, q) for i in range(n + 1))


def moebius_mu(dim: int, q: int) -> int:
    """(-1)^dim * q^(dim (dim-1) / 2)."""
    return (-1) ** dim * q ** (dim * (dim - 1) // 2)


def product_formula_coeffs(n: int, q: int) -> list[int]:
    """Coefficients of t^i in prod_{j<n} (1 + q^j t), by repeated multiplication."""
    coeffs = [1]
    for j in range(n):
        qj = q ** j
        nxt = coeffs + [0]
        for i, c in enumerate(coeffs):
            nxt[i + 1] += qj * c
        coeffs = nxt
    return coeffs


@dataclass(frozen=True)
class ConjectureCase:
    q: int
    u: int
    i: int
    holds: bool
    lhs: int
    rhs: int

    def as_record(self) -> dict:
        return {"q": self.q, "u": self.u, "i": self.i, "holds": self.holds,
                "lhs": str(self.lhs), "rhs": str(self.rhs)}


def verify_conjecture(q: int, u: int, i: int) -> ConjectureCase:
    r"""Evaluate both sides of

        binom(u,i)_{q^2} * sum_j q^j binom(i,j)_{q^2}
            == binom(u,i)_q * prod_{j<i} (1 + q^(u-j)).
    """
    _check_q(q)
    if i > u:
        return ConjectureCase(q, u, i, True, 0, 0)
    q2 = q * q
    lhs = gaussian_binom(u, i, q2) * sum(q ** j * gaussian_binom(i, j, q2) for j in range(i + 1))
    rhs = gaussian_binom(u, i, q)
    for j in range(i):
        rhs *= 1 + q ** (u - j)
    return ConjectureCase(q, u, i, lhs == rhs, lhs, rhs)


def conjecture_sweep(qs, u_max: int) -> list[ConjectureCase]:
    """All cases with q in ``qs``, 0 <= i <= u <= u_max, in (q, u, i) order."""
    return [verify_conjecture(q, u, i)
            for q in qs for u in range(u_max + 1) for i in range(u + 1)]

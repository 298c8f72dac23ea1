"""Linearized polynomials f_a(x) = sum_j a_j x^(p^(j d)) over a FieldContext."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .errors import BudgetError, ConsistencyError, ParameterError
from .lattice import Subspace

EXHAUSTIVE_CAP = 2 ** 20


class LinearizedPoly:
    """The map x -> sum_j a_j x^(p^(j d)) on F_{p^m}.

    Parameters
    ----------
    ctx : FieldContext
        Supplies p, m, d and k.
    a : sequence of int
        Exactly k coefficients a_0 .. a_{k-1}.
    """

    def __init__(self, ctx, a):
        a = [int(x) for x in a]
        if len(a) != ctx.k:
            raise ParameterError(f"expected {ctx.k} coefficients, got {len(a)}")
        if any(not 0 <= x < ctx.order for x in a):
            raise ParameterError("coefficient outside the field")
        self.ctx = ctx
        self.a = tuple(a)
        m, d = ctx.m, ctx.d
        self.exponents = tuple((j * d) % m for j in range(ctx.k))
        # k <= m/e makes the reduced Frobenius exponents pairwise distinct
        assert len(set(self.exponents)) == len(self.exponents)

    def __call__(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for aj, t in zip(self.a, self.exponents):
            if aj:
                acc = ctx.add(acc, ctx.mul(aj, ctx.frobenius(x, t)))
        return acc

    def is_zero(self) -> bool:
        return not any(self.a)

    def subfield_matrix(self) -> list[list[int]]:
        """Matrix of f over F_{p^e} in ``subfield_basis`` coordinates (columns = images)."""
        ctx = self.ctx
        cols = [ctx.coords_over_subfield(self(b)) for b in ctx.subfield_basis]
        return linalg.transpose(cols)

    def __repr__(self):
        return f"LinearizedPoly(a={list(self.a)}, d={self.ctx.d})"


def evaluate(f: LinearizedPoly, x: int) -> int:
    return f(x)


@dataclass(frozen=True)
class NullSpaceResult:
    r: int
    size: int
    basis: tuple[tuple[int, ...], ...]


def roots_exhaustive(f: LinearizedPoly) -> list[int]:
    ctx = f.ctx
    if ctx.order > EXHAUSTIVE_CAP:
        raise BudgetError(f"field of size {ctx.order} too large for root enumeration",
                          ctx.order, EXHAUSTIVE_CAP)
    return [x for x in ctx.elements if f(x) == 0]


def null_space(f: LinearizedPoly, exhaustive: bool | None = None) -> NullSpaceResult:
    """Null(f) as an F_{p^e}-subspace.

    The basis comes from the kernel of :meth:`LinearizedPoly.subfield_matrix`.
    When ``exhaustive`` is true (default: whenever the field is small enough)
    the roots are also enumerated directly and both views must agree.
    """
    ctx = f.ctx
    F = ctx.subfield
    s = ctx.params.s
    ker = linalg.kernel_basis(f.subfield_matrix(), F, s)
    sub = Subspace.span(ker, F, s)
    r = sub.dim
    size = ctx.subfield.order ** r
    if exhaustive is None:
        exhaustive = ctx.order <= EXHAUSTIVE_CAP
    if exhaustive:
        roots = roots_exhaustive(f)
        if len(roots) != size:
            raise ConsistencyError(
                f"root count {len(roots)} disagrees with kernel size {size} for {f!r}")
        rootset = set(roots)
        if any(ctx.from_coords(v) not in rootset for v in sub.basis):
            raise ConsistencyError(f"kernel vector is not a root of {f!r}")
    return NullSpaceResult(r, size, sub.basis)


def image_size(f: LinearizedPoly) -> int:
    ctx = f.ctx
    rk = linalg.rank(f.subfield_matrix(), ctx.subfield)
    return ctx.subfield.order ** rk


def image_contains(f: LinearizedPoly, y: int) -> bool:
    """Whether y = f(x) is solvable, decided by ranks over F_{p^e}."""
    ctx = f.ctx
    M = f.subfield_matrix()
    rhs = ctx.coords_over_subfield(y)
    aug = [row + [c] for row, c in zip(M, rhs)]
    return linalg.rank(aug, ctx.subfield) == linalg.rank(M, ctx.subfield)


def image_exhaustive(f: LinearizedPoly) -> set[int]:
    return {f(x) for x in f.ctx.elements}


def moore_matrix(ctx, xs, k: int | None = None) -> list[list[int]]:
    """Rows (x, x^(p^d), ..., x^(p^((k-1) d))) for each x in xs.

    More than k rows is allowed; the rank is then at most k.
    """
    if k is None:
        k = ctx.k
    return [[ctx.frobenius(x, j * ctx.d) for j in range(k)] for x in xs]


def is_full_rank(ctx, M) -> bool:
    return linalg.rank(M, ctx) == min(len(M), len(M[0]) if M else 0)


def subfield_rank(ctx, xs) -> int:
    """Dimension of the F_{p^e}-span of xs."""
    if not xs:
        return 0
    return linalg.rank([ctx.coords_over_subfield(x) for x in xs], ctx.subfield)


def moore_rank_trials(ctx, trials: int = 1000, seed: int = 0) -> dict:
    """Random F_{p^e}-independent tuples must give full-rank Moore matrices.

    For each trial a size r in [1, k] is drawn and elements are redrawn
    until the tuple is independent.  A proportional-row tuple
    (x, c x) with c in F_{p^e} is also tested per trial when k >= 2 and
    must be rank deficient.
    """
    rng = random.Random(seed)
    k = ctx.k
    sub = ctx.subfield.elements
    full = deficient = failures = 0
    for _ in range(trials):
        r = rng.randint(1, k)
        while True:
            xs = [rng.randrange(1, ctx.order) for _ in range(r)]
            if subfield_rank(ctx, xs) == r:
                break
        if linalg.rank(moore_matrix(ctx, xs, k), ctx) == r:
            full += 1
        else:
            failures += 1
        if k >= 2:
            x = rng.randrange(1, ctx.order)
            c = rng.choice(sub[1:])
            if linalg.rank(moore_matrix(ctx, [x, ctx.mul(c, x)], k), ctx) < 2:
                deficient += 1
            else:
                failures += 1
    return {"params": ctx.params.as_dict(), "trials": trials, "seed": seed,
            "full_rank": full, "proportional_deficient": deficient,
            "failures": failures, "ok": failures == 0}

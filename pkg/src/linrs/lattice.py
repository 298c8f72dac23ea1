"""Subspace lattices of F_q^n: enumeration, Moebius sums, inversion, duals.

A :class:`Subspace` is keyed by its RREF basis, so equality of subspaces
is equality of keys.  Scalar fields are duck-typed as in :mod:`linalg`
and must also expose ``elements`` (the list of field elements).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from . import linalg
from .errors import BudgetError
from .field import GF
from .params import prime_power
from .qbinom import moebius_mu

LATTICE_CAP = 2 ** 12


@dataclass(frozen=True, order=True)
class Subspace:
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, vectors, F, n: int) -> "Subspace":
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(n, ())
        R, r, _ = linalg.rref(vectors, F)
        return cls(n, tuple(tuple(row) for row in R[:r]))

    def sort_key(self):
        return (self.dim, self.basis)


def scalar_field(q: int) -> GF:
    p, s = prime_power(q)
    return GF(p, s)


def enumerate_subspaces_over(F, n: int, cap: int = LATTICE_CAP) -> list[Subspace]:
    """All subspaces of F^n, sorted by (dimension, basis).

    Each subspace is produced exactly once by iterating over pivot column
    sets and filling the free RREF positions with every field element.
    """
    q = len(F.elements)
    if q ** n > cap:
        raise BudgetError(f"lattice of F_{q}^{n} exceeds cap q^n <= {cap}", q ** n, cap)
    out = [Subspace(n, ())]
    for r in range(1, n + 1):
        for pivots in itertools.combinations(range(n), r):
            pset = set(pivots)
            free = [(i, c) for i, pc in enumerate(pivots)
                    for c in range(pc + 1, n) if c not in pset]
            for vals in itertools.product(F.elements, repeat=len(free)):
                rows = [[0] * n for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), v in zip(free, vals):
                    rows[i][c] = v
                out.append(Subspace(n, tuple(tuple(row) for row in rows)))
    out.sort(key=Subspace.sort_key)
    return out


def enumerate_subspaces(q: int, n: int, cap: int = LATTICE_CAP) -> list[Subspace]:
    if q ** n > cap:
        raise BudgetError(f"lattice of F_{q}^{n} exceeds cap q^n <= {cap}", q ** n, cap)
    return enumerate_subspaces_over(scalar_field(q), n, cap)


def is_subspace(V: Subspace, U: Subspace, F) -> bool:
    """V contained in U."""
    if V.dim > U.dim:
        return False
    if V.dim == 0:
        return True
    return linalg.rank(list(U.basis) + list(V.basis), F) == U.dim


class Lattice:
    """The full subspace lattice of F^n with a precomputed containment relation."""

    def __init__(self, F, n: int, cap: int = LATTICE_CAP):
        self.F = F
        self.n = n
        self.q = len(F.elements)
        self.subspaces = enumerate_subspaces_over(F, n, cap)
        self.index = {S: i for i, S in enumerate(self.subspaces)}

    @classmethod
    def over(cls, q: int, n: int, cap: int = LATTICE_CAP) -> "Lattice":
        if q ** n > cap:
            raise BudgetError(f"lattice of F_{q}^{n} exceeds cap q^n <= {cap}", q ** n, cap)
        return cls(scalar_field(q), n, cap)

    def __len__(self):
        return len(self.subspaces)

    @cached_property
    def below(self) -> list[list[int]]:
        """below[u] = indices of all V contained in subspaces[u]."""
        subs = self.subspaces
        return [[v for v, V in enumerate(subs) if is_subspace(V, U, self.F)]
                for U in subs]

    def mu(self, upper: int, lower: int) -> int:
        return moebius_mu(self.subspaces[upper].dim - self.subspaces[lower].dim, self.q)

    def zeta_sum(self, f) -> list[int]:
        """g(U) = sum_{V <= U} f(V); f and g indexed like ``subspaces``."""
        return [sum(f[v] for v in vs) for vs in self.below]

    def moebius_sum(self, g) -> list[int]:
        """f(U) = sum_{V <= U} mu(U/V) g(V)."""
        return [sum(self.mu(u, v) * g[v] for v in vs) for u, vs in enumerate(self.below)]

    def counts_by_dim(self) -> list[int]:
        out = [0] * (self.n + 1)
        for S in self.subspaces:
            out[S.dim] += 1
        return out


def moebius_delta_sums(lat: Lattice) -> list[int]:
    """sum_{V <= U} mu_q(V) for every U in the lattice."""
    return [sum(moebius_mu(lat.subspaces[v].dim, lat.q) for v in vs) for vs in lat.below]


def moebius_delta_check(q: int, n: int, lattice: Lattice | None = None) -> bool:
    lat = lattice or Lattice.over(q, n)
    sums = moebius_delta_sums(lat)
    return all(s == (1 if S.dim == 0 else 0) for s, S in zip(sums, lat.subspaces))


def random_function(lat: Lattice, seed: int, lo: int = -1000, hi: int = 1000) -> list[int]:
    rng = random.Random(seed)
    return [rng.randint(lo, hi) for _ in lat.subspaces]


def inversion_check(q: int, n: int, f=None, seed: int = 0, lattice: Lattice | None = None) -> bool:
    """Round-trip f -> zeta -> Moebius and g -> Moebius -> zeta.

    ``f`` is a list aligned with the lattice's subspaces; if omitted a
    seeded pseudo-random table is used.  The same table serves as g for
    the converse direction.
    """
    lat = lattice or Lattice.over(q, n)
    if f is None:
        f = random_function(lat, seed)
    forward = lat.moebius_sum(lat.zeta_sum(f)) == list(f)
    converse = lat.zeta_sum(lat.moebius_sum(f)) == list(f)
    return forward and converse


def trace_gram(ctx) -> list[list[int]]:
    """Gram matrix of ``subfield_basis`` under (x, y) -> Tr(x y)."""
    b = ctx.subfield_basis
    return [[ctx.trace_to_subfield(ctx.mul(x, y)) for y in b] for x in b]


def orth_complement(ctx, V: Subspace, gram=None) -> Subspace:
    """{y : <x, y> = 0 for all x in V}, in subfield coordinates.

    The pairing is ``coords(x)^T G coords(y)``; G defaults to the trace form
    Tr_{F_{p^m}/F_{p^e}}(x y).
    """
    F = ctx.subfield
    n = V.ambient_dim
    G = gram if gram is not None else trace_gram(ctx)
    if V.dim == 0:
        return Subspace.span([[1 if j == i else 0 for j in range(n)] for i in range(n)], F, n)
    A = linalg.matmul([list(row) for row in V.basis], G, F)
    return Subspace.span(linalg.kernel_basis(A, F, n), F, n)


def subfield_lattice(ctx, cap: int = LATTICE_CAP) -> Lattice:
    """Lattice of F_{p^e}-subspaces of F_{p^m} (in subfield coordinates)."""
    return Lattice(ctx.subfield, ctx.params.s, cap)

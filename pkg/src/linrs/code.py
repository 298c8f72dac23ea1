"""The cyclic code C = {(f_a(1), f_a(pi), ..., f_a(pi^(q-2)))} and its weights.

Three independent routes to the frequencies n_r (number of nonzero a with
|Null(f_a)| = p^(e r), i.e. weight p^m - p^(e r)):

* :func:`weight_distribution_formula` -- closed form in Gaussian binomials;
* :func:`weight_distribution_bruteforce` -- enumerate every codeword;
* :func:`weight_distribution_moebius` -- Moebius inversion of |C_V| over the
  lattice of F_{p^e}-subspaces of F_{p^m}.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from . import linalg
from .enumerate import run_partitioned, weight_histogram_range
from .errors import BudgetError, ConsistencyError
from .lattice import LATTICE_CAP, Subspace, orth_complement, subfield_lattice
from .linearized import LinearizedPoly, moore_matrix, null_space
from .params import FieldParams
from .qbinom import gaussian_binom

DEFAULT_BUDGET = 2 ** 26
MOEBIUS_MAX_S = 4

# points used by the acceptance suite and `weight-dist` examples
DEFAULT_GRID = [
    (2, 2, 1, 2), (2, 4, 1, 2), (2, 4, 1, 3), (2, 4, 1, 4), (2, 4, 2, 2),
    (2, 6, 2, 3), (3, 2, 1, 2), (3, 3, 1, 3), (5, 2, 1, 2),
]


@dataclass(frozen=True)
class WeightDistribution:
    """n_r for 0 <= r <= k-1, counting nonzero coefficient vectors only.

    The zero codeword (weight 0, frequency 1) is reported separately by
    :meth:`as_json`.
    """

    params: FieldParams
    counts: tuple[int, ...]
    method: str

    def weight(self, r: int) -> int:
        return self.params.q - self.params.qe ** r

    @property
    def total(self) -> int:
        return sum(self.counts)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(r, self.weight(r), n) for r, n in enumerate(self.counts)]

    def weight_enumerator(self) -> dict[int, int]:
        """weight -> frequency including the zero codeword; sums to p^(m k)."""
        out = {0: 1}
        for _, w, n in self.rows():
            out[w] = out.get(w, 0) + n
        return out

    def as_json(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "method": self.method,
            "rows": [{"r": r, "weight": w, "count": str(n)} for r, w, n in self.rows()],
            "zero_codeword": {"weight": 0, "count": "1"},
            "nonzero_total": str(self.total),
            "total": str(self.total + 1),
        }

    def as_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "weight", "count"])
        for row in self.rows():
            w.writerow(row)
        return buf.getvalue()


def codeword(ctx, a) -> list[int]:
    """Entries f_a(pi^i) for i = 0 .. q-2."""
    f = LinearizedPoly(ctx, a)
    return [f(x) for x in ctx.exp_table]


def codeword_weight(ctx, a) -> int:
    """Hamming weight of c_a; cross-checked against q - |Null(f_a)|."""
    w = sum(1 for v in codeword(ctx, a) if v)
    ns = null_space(LinearizedPoly(ctx, a))
    if w != ctx.order - ns.size:
        raise ConsistencyError(f"weight {w} != q - |Null| = {ctx.order - ns.size}")
    return w


def weight_distribution_formula(params: FieldParams) -> WeightDistribution:
    """Closed-form n_r; needs no field tables and no enumeration."""
    p, m, e, k = params.p, params.m, params.e, params.k
    qe, s = params.qe, params.s
    counts = []
    for r in range(k):
        acc = 0
        for i in range(k - r):
            acc += ((-1) ** i * p ** (e * i * (i - 1) // 2) * gaussian_binom(s - r, i, qe)
                    * (p ** (m * (k - r - i)) - 1))
        n_r = gaussian_binom(s, r, qe) * acc
        if n_r < 0:
            raise ConsistencyError(f"negative frequency n_{r} = {n_r} for {params}")
        counts.append(n_r)
    return WeightDistribution(params, tuple(counts), "formula")


def _r_from_null_size(params: FieldParams, size: int) -> int:
    r, v = 0, 1
    while v < size:
        v *= params.qe
        r += 1
    if v != size or r > params.k - 1:
        raise ConsistencyError(
            f"|Null| = {size} is not p^(e r) with r <= k-1 for {params}")
    return r


def weight_distribution_bruteforce(ctx, budget: int = DEFAULT_BUDGET,
                                   workers: int = 1) -> WeightDistribution:
    """Enumerate every nonzero a, take the codeword weight, bucket by r.

    Raises BudgetError when q^k exceeds ``budget``.  Weights outside
    {q - p^(e r)} raise ConsistencyError.
    """
    params = ctx.params
    total = ctx.order ** ctx.k
    if total > budget:
        raise BudgetError(f"brute force needs {total} enumerations, budget is {budget}",
                          total, budget)
    hist = run_partitioned(weight_histogram_range, ctx, total, workers)
    counts = [0] * params.k
    for w, c in hist.items():
        counts[_r_from_null_size(params, ctx.order - w)] += c
    return WeightDistribution(params, tuple(counts), "brute_force")


def observed_weights(ctx, budget: int = DEFAULT_BUDGET, workers: int = 1) -> dict[int, int]:
    """Raw weight histogram of all nonzero codewords."""
    total = ctx.order ** ctx.k
    if total > budget:
        raise BudgetError(f"brute force needs {total} enumerations, budget is {budget}",
                          total, budget)
    return dict(sorted(run_partitioned(weight_histogram_range, ctx, total, workers).items()))


def c_v_count(ctx, V: Subspace, gram=None) -> int:
    """|C_V| = #{a : Null(f_a) contains V-perp}, from the Moore-matrix kernel.

    Also asserts the closed form: 1 if dim V-perp >= k, else p^(m (k - dim V-perp)).
    """
    perp = orth_complement(ctx, V, gram)
    xs = [ctx.from_coords(v) for v in perp.basis]
    k = ctx.k
    rk = linalg.rank(moore_matrix(ctx, xs, k), ctx) if xs else 0
    count = ctx.order ** (k - rk)
    r = perp.dim
    expected = 1 if r >= k else ctx.p ** (ctx.m * (k - r))
    if count != expected:
        raise ConsistencyError(f"|C_V| = {count}, expected {expected} (dim V-perp = {r})")
    return count


def weight_distribution_moebius(ctx, gram=None, cap: int = LATTICE_CAP) -> WeightDistribution:
    """n_r via |S_V| = sum_{W <= V} mu(V/W) (|C_W| - 1) over the subspace lattice.

    ``gram`` selects the pairing defining V-perp (default: trace form);
    the result must not depend on it.
    """
    params = ctx.params
    if params.s > MOEBIUS_MAX_S:
        raise BudgetError(f"Moebius path needs m/e <= {MOEBIUS_MAX_S}, got {params.s}",
                          params.s, MOEBIUS_MAX_S)
    lat = subfield_lattice(ctx, cap)
    cv = [c_v_count(ctx, V, gram) - 1 for V in lat.subspaces]
    sv = lat.moebius_sum(cv)
    counts = [0] * params.k
    for V, n in zip(lat.subspaces, sv):
        r = params.s - V.dim
        if r < params.k:
            counts[r] += n
        elif n:
            raise ConsistencyError(f"|S_V| = {n} != 0 for dim V-perp = {r} >= k")
    return WeightDistribution(params, tuple(counts), "moebius")

import itertools
import random
from collections import Counter

import pytest

from linrs import linalg
from linrs.code import (DEFAULT_GRID, c_v_count, codeword, codeword_weight, observed_weights,
                        weight_distribution_bruteforce, weight_distribution_formula,
                        weight_distribution_moebius)
from linrs.errors import BudgetError
from linrs.field import field_build, is_primitive_poly
from linrs.lattice import subfield_lattice
from linrs.params import FieldParams

from conftest import NaiveField, naive_eval


def naive_distribution(p, m, d, k, modulus):
    """n_r by evaluating every codeword with schoolbook arithmetic."""
    N = NaiveField(p, m, modulus)
    e = FieldParams(p, m, d, k).e
    pi = p if m > 1 else (-modulus[0]) % p
    positions = [N.pow(pi, i) for i in range(p ** m - 1)]
    counts = Counter()
    for a in itertools.product(range(p ** m), repeat=k):
        if not any(a):
            continue
        w = sum(1 for x in positions if naive_eval(N, a, d, x))
        zeros = p ** m - w
        r = 0
        while p ** (e * r) < zeros:
            r += 1
        assert p ** (e * r) == zeros
        counts[r] += 1
    return tuple(counts[r] for r in range(k))


def ctx_for(*pmdk, modulus=None):
    return field_build(FieldParams(*pmdk), modulus)


def test_codeword_examples():
    ctx = ctx_for(2, 2, 1, 2)
    assert codeword(ctx, [0, 0]) == [0, 0, 0]
    assert codeword_weight(ctx, [0, 0]) == 0
    assert codeword(ctx, [1, 0]) == [1, 2, 3]
    assert codeword_weight(ctx, [1, 0]) == 3
    assert codeword(ctx, [1, 1]) == [0, 1, 1]
    assert codeword_weight(ctx, [1, 1]) == 2


@pytest.mark.parametrize("pmdk,expected", [
    ((2, 2, 1, 2), (6, 9)),
    ((2, 4, 2, 2), (180, 75)),
])
def test_formula_examples(pmdk, expected):
    ctx = ctx_for(*pmdk)
    assert naive_distribution(*pmdk, ctx.modulus) == expected
    assert weight_distribution_formula(FieldParams(*pmdk)).counts == expected


def test_k_equal_one():
    for p, m, d in [(2, 3, 1), (3, 2, 2), (5, 1, 1), (2, 6, 4)]:
        params = FieldParams(p, m, d, 1)
        assert weight_distribution_formula(params).counts == (p ** m - 1,)
        ctx = field_build(params)
        assert weight_distribution_bruteforce(ctx).counts == (p ** m - 1,)
        assert weight_distribution_moebius(ctx).counts == (p ** m - 1,)


@pytest.mark.parametrize("pmdk", [(2, 2, 1, 2), (2, 3, 1, 2), (3, 2, 1, 2), (2, 4, 2, 2), (5, 2, 1, 2)])
def test_bruteforce_matches_schoolbook_oracle(pmdk):
    ctx = ctx_for(*pmdk)
    assert weight_distribution_bruteforce(ctx).counts == naive_distribution(*pmdk, ctx.modulus)


@pytest.mark.parametrize("pmdk", DEFAULT_GRID)
def test_three_way_agreement(pmdk):
    params = FieldParams(*pmdk)
    ctx = field_build(params)
    f = weight_distribution_formula(params)
    assert weight_distribution_bruteforce(ctx).counts == f.counts
    assert weight_distribution_moebius(ctx).counts == f.counts


@pytest.mark.parametrize("pmdk", DEFAULT_GRID)
def test_weight_set(pmdk):
    ctx = ctx_for(*pmdk)
    allowed = {ctx.order - ctx.subfield.order ** r for r in range(ctx.k)}
    hist = observed_weights(ctx)
    assert set(hist) <= allowed
    assert sum(hist.values()) == ctx.order ** ctx.k - 1


def test_formula_mass_identity_wide_grid():
    for p in (2, 3, 5, 7):
        for m in range(1, 13):
            for d in range(1, m + 1):
                params = FieldParams(p, m, d, 1)
                for k in range(1, params.s + 1):
                    wd = weight_distribution_formula(FieldParams(p, m, d, k))
                    assert wd.total == p ** (m * k) - 1
                    assert all(n >= 0 for n in wd.counts)


def test_budget_error():
    ctx = ctx_for(3, 4, 1, 4)
    with pytest.raises(BudgetError) as exc:
        weight_distribution_bruteforce(ctx, budget=1000)
    assert exc.value.required == 3 ** 16


def test_workers_do_not_change_result():
    ctx = ctx_for(2, 4, 1, 3)
    one = weight_distribution_bruteforce(ctx, workers=1)
    three = weight_distribution_bruteforce(ctx, workers=3)
    assert one == three


@pytest.mark.parametrize("pmdk", [(2, 4, 1, 2), (3, 2, 1, 2), (2, 4, 2, 2), (2, 6, 2, 3)])
def test_independent_of_primitive_polynomial(pmdk):
    p, m = pmdk[0], pmdk[1]
    polys = [list(c) + [1] for c in sorted(itertools.product(range(p), repeat=m),
                                          key=lambda c: sum(v * p ** i for i, v in enumerate(c)))
             if is_primitive_poly(list(c) + [1], p)]
    assert len(polys) >= 2
    a = weight_distribution_bruteforce(ctx_for(*pmdk, modulus=polys[0]))
    b = weight_distribution_bruteforce(ctx_for(*pmdk, modulus=polys[-1]))
    assert a.counts == b.counts
    assert weight_distribution_moebius(ctx_for(*pmdk, modulus=polys[-1])).counts == a.counts


def test_c_v_count_examples():
    ctx = ctx_for(2, 2, 1, 2)
    lat = subfield_lattice(ctx)
    by_perp = {}
    for V in lat.subspaces:
        by_perp.setdefault(ctx.params.s - V.dim, set()).add(c_v_count(ctx, V))
    assert by_perp == {0: {16}, 1: {4}, 2: {1}}


def test_c_v_count_by_direct_enumeration():
    ctx = ctx_for(2, 4, 2, 2)
    lat = subfield_lattice(ctx)
    from linrs.lattice import orth_complement
    from linrs.linearized import LinearizedPoly
    for V in lat.subspaces:
        perp = [ctx.from_coords(v) for v in orth_complement(ctx, V).basis]
        direct = sum(1 for a in itertools.product(range(16), repeat=2)
                     if all(LinearizedPoly(ctx, a)(x) == 0 for x in perp))
        assert c_v_count(ctx, V) == direct


def random_invertible(F, n, rng):
    while True:
        G = [[rng.choice(F.elements) for _ in range(n)] for _ in range(n)]
        if linalg.rank(G, F) == n:
            return G


@pytest.mark.parametrize("pmdk", [(2, 4, 1, 3), (2, 4, 2, 2), (3, 3, 1, 2), (2, 6, 2, 3)])
def test_moebius_path_independent_of_pairing(pmdk):
    ctx = ctx_for(*pmdk)
    rng = random.Random(17)
    base = weight_distribution_moebius(ctx).counts
    for _ in range(3):
        G = random_invertible(ctx.subfield, ctx.params.s, rng)
        assert weight_distribution_moebius(ctx, gram=G).counts == base


def test_serialisation():
    wd = weight_distribution_formula(FieldParams(2, 2, 1, 2))
    js = wd.as_json()
    assert js["rows"] == [{"r": 0, "weight": 3, "count": "6"}, {"r": 1, "weight": 2, "count": "9"}]
    assert js["total"] == "16" and js["nonzero_total"] == "15"
    assert wd.as_csv() == "r,weight,count\n0,3,6\n1,2,9\n"
    assert sum(wd.weight_enumerator().values()) == 16

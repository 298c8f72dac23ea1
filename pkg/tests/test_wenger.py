import itertools

import numpy as np
import pytest

from linrs.errors import BudgetError
from linrs.field import field_build
from linrs.params import FieldParams
from linrs.wenger import (ZERO, Eigenvalue, SpectrumMultiset, build_edges, paper_zero_expression,
                          reconcile_report, spectrum_counting, spectrum_dense, spectrum_formula)


def ctx_for(*pmdk):
    return field_build(FieldParams(*pmdk))


def test_edge_counts_small():
    g = build_edges(ctx_for(2, 2, 1, 1))
    assert g.point_count == g.line_count == 16
    edges = list(g.iter_edges())
    assert len(edges) == 64 == len(set(edges))
    B = g.biadjacency()
    assert (B.sum(axis=0) == 4).all() and (B.sum(axis=1) == 4).all()
    assert B[0, 0] == 1
    g2 = build_edges(ctx_for(2, 2, 1, 2))
    assert g2.point_count == 64
    assert len(list(g2.iter_edges())) == 256


def test_edges_satisfy_incidence_equations_exhaustively():
    ctx = ctx_for(2, 2, 1, 2)
    g = build_edges(ctx)
    B = g.biadjacency()
    for pi, li in itertools.product(range(g.point_count), repeat=2):
        assert bool(B[pi, li]) == g.is_edge(g._coords(pi), g._coords(li))


def test_edge_cap():
    with pytest.raises(BudgetError):
        build_edges(ctx_for(2, 4, 1, 4))


def key(sign, exp=None):
    return ZERO if sign == 0 else Eigenvalue(sign, exp)


def test_formula_examples():
    s = spectrum_formula(FieldParams(2, 2, 1, 1))
    assert dict(s.entries) == {key(1, 4): 1, key(-1, 4): 1, key(1, 2): 12, key(-1, 2): 12, ZERO: 6}
    assert s.total() == 32
    s = spectrum_formula(FieldParams(2, 2, 1, 2))
    assert dict(s.entries) == {key(1, 4): 1, key(-1, 4): 1, key(1, 2): 24, key(-1, 2): 24,
                               key(1, 3): 18, key(-1, 3): 18, ZERO: 42}
    assert s.total() == 128 and s.trace_sq() == 512


def test_k1_zero_multiplicity():
    for p, m, d in [(2, 3, 1), (3, 2, 1), (5, 2, 2)]:
        s = spectrum_formula(FieldParams(p, m, d, 1))
        assert s.multiplicity(ZERO) == 2 * (p ** m - 1)


def test_formula_invariants_wide():
    for p in (2, 3, 5, 7):
        for m in range(1, 9):
            for d in range(1, m + 1):
                s_dim = FieldParams(p, m, d, 1).s
                for k in range(1, s_dim + 1):
                    if p ** (m * (k + 2)) > 2 ** 40:
                        continue
                    params = FieldParams(p, m, d, k)
                    checks = spectrum_formula(params).check_invariants(params)
                    assert all(checks.values()), (params, checks)


@pytest.mark.parametrize("pmdk", [(2, 2, 1, 1), (2, 2, 1, 2), (3, 2, 1, 2), (2, 4, 2, 2),
                                  (2, 3, 1, 2), (2, 4, 1, 2), (5, 2, 1, 1), (3, 3, 1, 2),
                                  (2, 4, 1, 3), (3, 2, 2, 1)])
def test_counting_equals_formula(pmdk):
    params = FieldParams(*pmdk)
    assert spectrum_counting(field_build(params)) == spectrum_formula(params)


def test_counting_special_tuples():
    ctx = ctx_for(2, 2, 1, 2)
    s = spectrum_counting(ctx)
    assert s.multiplicity(Eigenvalue(1, 4)) == 1
    # a = 0 with nonzero constant: 2 (q - 1) zeros, plus zeros from a != 0
    assert s.multiplicity(ZERO) >= 2 * 3


def test_counting_budget():
    with pytest.raises(BudgetError):
        spectrum_counting(ctx_for(2, 4, 1, 2), budget=100)


@pytest.mark.parametrize("pmdk", [(2, 2, 1, 1), (2, 2, 1, 2), (3, 1, 1, 1), (2, 3, 1, 1)])
def test_dense_matches_exact(pmdk):
    ctx = ctx_for(*pmdk)
    dense = spectrum_dense(ctx)
    exact = spectrum_formula(ctx.params)
    assert dense.max_deviation(exact) <= 1e-6
    assert np.allclose(dense.eigenvalues, -dense.eigenvalues[::-1])
    assert dense.eigenvalues[-1] == pytest.approx(ctx.order, abs=1e-9)


def test_dense_against_full_adjacency():
    g = build_edges(ctx_for(2, 2, 1, 2))
    B = g.biadjacency().astype(float)
    n = B.shape[0]
    A = np.block([[np.zeros((n, n)), B], [B.T, np.zeros((n, n))]])
    ref = np.linalg.eigvalsh(A)
    assert np.allclose(spectrum_dense(g.ctx).eigenvalues, ref, atol=1e-6)


def test_paper_zero_expression():
    assert paper_zero_expression(FieldParams(2, 2, 1, 2)) == 18
    assert paper_zero_expression(FieldParams(2, 2, 1, 1)) == 0


def test_reconcile_report_flags_erratum():
    rep = reconcile_report(ctx_for(2, 2, 1, 2))
    assert rep["paper_zero_expr"] == "18"
    assert rep["corrected_zero"] == "42"
    assert rep["oracle_zero"] == "42"
    assert rep["erratum_flagged"] is True
    assert rep["verdicts"] == {"formula_eq_counting": True, "formula_eq_dense": True}
    assert rep["mass_checks"] == {"vertices": True, "trace_sq": True}
    assert rep["consistent"]
    rep1 = reconcile_report(ctx_for(2, 2, 1, 1))
    assert (rep1["paper_zero_expr"], rep1["oracle_zero"], rep1["erratum_flagged"]) == ("0", "6", True)


def test_multiset_serialisation():
    s = SpectrumMultiset(2, {Eigenvalue(1, 2): 3, Eigenvalue(-1, 2): 3, ZERO: 2})
    assert s.as_json()[1] == {"sign": 0, "lambda_sq_exponent": None, "multiplicity": "2"}
    assert s.as_csv().splitlines()[0] == "sign,lambda_sq_exponent,multiplicity"
    assert s.is_traceless()
    assert not SpectrumMultiset(2, {Eigenvalue(1, 2): 1}).is_traceless()

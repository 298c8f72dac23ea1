import pytest

from linrs.errors import ParameterError
from linrs.lattice import enumerate_subspaces
from linrs.qbinom import (conjecture_sweep, galois_number, gaussian_binom,
                          gaussian_binom_recurrence, moebius_mu, product_formula_coeffs,
                          verify_conjecture)

QS = [2, 3, 4, 5, 7, 8, 9]


def test_examples():
    assert all(gaussian_binom(n, 0, q) == 1 for n in range(6) for q in QS)
    assert gaussian_binom(2, 1, 2) == 3
    assert gaussian_binom(4, 2, 2) == 35
    assert gaussian_binom(2, 3, 2) == 0
    with pytest.raises(ParameterError):
        gaussian_binom(3, 1, 1)


def test_counts_subspaces_by_enumeration():
    for q, n in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (2, 6), (4, 3)]:
        subs = enumerate_subspaces(q, n)
        for i in range(n + 1):
            assert sum(1 for S in subs if S.dim == i) == gaussian_binom(n, i, q)
        assert len(subs) == galois_number(n, q)


@pytest.mark.parametrize("q", QS)
def test_symmetry_and_pascal(q):
    for n in range(1, 13):
        for i in range(n + 1):
            g = gaussian_binom(n, i, q)
            assert g == gaussian_binom(n, n - i, q)
            if i >= 1:
                assert g == gaussian_binom(n - 1, i - 1, q) + q ** i * gaussian_binom(n - 1, i, q)
            assert g == gaussian_binom_recurrence(n, i, q)


def test_moebius_mu():
    assert moebius_mu(0, 5) == 1
    assert moebius_mu(1, 5) == -1
    assert moebius_mu(2, 2) == 2
    assert moebius_mu(3, 2) == -8


def test_product_formula_examples():
    assert product_formula_coeffs(0, 2) == [1]
    assert product_formula_coeffs(2, 2) == [1, 3, 2]
    assert product_formula_coeffs(3, 2) == [1, 7, 14, 8]


@pytest.mark.parametrize("q", QS)
def test_product_formula_identity(q):
    for n in range(13):
        coeffs = product_formula_coeffs(n, q)
        assert coeffs == [q ** (i * (i - 1) // 2) * gaussian_binom(n, i, q) for i in range(n + 1)]


def test_conjecture_examples():
    c = verify_conjecture(3, 5, 0)
    assert c.holds and c.lhs == c.rhs == 1
    c = verify_conjecture(2, 2, 1)
    assert (c.holds, c.lhs, c.rhs) == (True, 15, 15)
    c = verify_conjecture(2, 2, 2)
    assert (c.holds, c.lhs, c.rhs) == (True, 15, 15)
    assert verify_conjecture(2, 1, 3).holds


def test_conjecture_sweep_holds():
    cases = conjecture_sweep(QS, 8)
    assert len(cases) == len(QS) * sum(u + 1 for u in range(9))
    assert all(c.holds for c in cases)
    rec = cases[-1].as_record()
    assert isinstance(rec["lhs"], str) and int(rec["lhs"]) == cases[-1].lhs

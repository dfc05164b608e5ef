import numpy as np
import pytest

from dfalg import scalars
from dfalg.dform import bianchi_residual, metric_power, transpose
from dfalg.fixtures import (
    SplitMix64,
    constant_curvature,
    jordan_block,
    random_bianchi,
    random_bilinear,
    random_form,
    rank_one_bilinear,
    suite_fixtures,
)
from fractions import Fraction


def test_splitmix64_golden_values():
    # frozen reference stream for seed 0 of the documented recurrence
    rng = SplitMix64(0)
    assert rng.next_u64() == 0x187C7E5A30947AEF
    assert rng.next_u64() == 0x9E64613A7A6AA0CB
    assert rng.next_u64() == 0xA754B030F199B800


def test_splitmix64_entry_range():
    rng = SplitMix64(42)
    vals = [rng.next_entry() for _ in range(500)]
    assert all(-3 <= v <= 3 for v in vals)
    assert len(set(vals)) == 7  # every value appears


def test_bilinear_determinism_and_symmetry():
    a = random_bilinear(4, 7, "symmetric")
    b = random_bilinear(4, 7, "symmetric")
    assert a == b
    assert a == transpose(a)
    sk = random_bilinear(4, 7, "skew")
    assert sk == -1 * transpose(sk)
    assert all(sk.mat[i, i] == 0 for i in range(4))
    g = random_bilinear(4, 9, "general")
    assert all(-3 <= v <= 3 for v in g.mat.flat)


def test_bilinear_golden_matrix():
    h = random_bilinear(2, 1, "general")
    rng = SplitMix64(1)
    expect = [[rng.next_entry() for _ in range(2)] for _ in range(2)]
    assert [[h.mat[i, j] for j in range(2)] for i in range(2)] == expect


def test_bilinear_kind_validation():
    with pytest.raises(ValueError):
        random_bilinear(3, 1, "hermitian")


@pytest.mark.parametrize("n,p", [(4, 1), (4, 2), (5, 2), (6, 3)])
def test_random_bianchi_properties(n, p):
    w = random_bianchi(n, p, terms=2, seed=31)
    assert w.bidegree == (p, p)
    assert w == transpose(w)
    assert bianchi_residual(w) == 0
    assert w == random_bianchi(n, p, terms=2, seed=31)


def test_random_bianchi_p1_is_symmetric_bilinear():
    w = random_bianchi(5, 1, terms=1, seed=32)
    assert w.bidegree == (1, 1) and w == transpose(w)


def test_random_bianchi_include_metric():
    n, p = 4, 2
    w0 = random_bianchi(n, p, terms=1, seed=33)
    w1 = random_bianchi(n, p, terms=1, seed=33, include_metric=True)
    assert w1 - w0 == metric_power(n, p) * Fraction(1, 2)


def test_random_bianchi_validation():
    with pytest.raises(ValueError):
        random_bianchi(4, 0, 1, 1)
    with pytest.raises(ValueError):
        random_bianchi(4, 2, 0, 1)


def test_constant_curvature_values():
    R = constant_curvature(4, 0)
    assert R.max_abs() == 0
    R = constant_curvature(4, "3/2")
    assert R == metric_power(4, 2) * Fraction(3, 4)


def test_rank_one_and_jordan():
    h = rank_one_bilinear(4, 5)
    # rank <= 1: all 2x2 minors vanish
    from dfalg import oracle

    assert oracle.minor_sum_oracle(h.mat, 2) == 0
    j = jordan_block(4)
    assert oracle.minor_sum_oracle(j.mat, 1) == 0
    import numpy as np

    m = j.mat
    assert np.all(m.dot(m).dot(m).dot(m) == 0)


def test_random_form_deterministic():
    a = random_form(5, 2, 99)
    b = random_form(5, 2, 99)
    assert a == b
    assert all(-3 <= v <= 3 for v in a.coeffs.flat)


def test_suite_fixtures_structure():
    fx = suite_fixtures(6, seed=1)
    assert fx.n == 6 and fx.bianchi3
    labels = [lab for lab, _ in fx.bilinear]
    assert "metric" in labels and "jordan_block" in labels
    for _, R in fx.bianchi2:
        assert bianchi_residual(R) == 0
    fx5 = suite_fixtures(5, seed=1)
    assert fx5.bianchi3 == []


def test_suite_fixtures_float_field():
    fx = suite_fixtures(3, seed=1, field=scalars.FLOAT64)
    assert all(h.field == scalars.FLOAT64 for _, h in fx.bilinear)

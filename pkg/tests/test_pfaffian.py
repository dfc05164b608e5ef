from fractions import Fraction

import numpy as np
import pytest

from dfalg import oracle
from dfalg.dform import bianchi_residual, hodge, transpose, wedge_power
from dfalg.exterior import ExteriorForm, wedge_multi
from dfalg.fixtures import random_bilinear, random_form
from dfalg.pfaffian import (
    check_pf_squared,
    double_form_as_multiform,
    embed,
    hyperdet,
    multiform_as_double_form,
    pf,
    skew_to_form,
)


def test_pf_two_by_two():
    h = random_bilinear(2, 8, "skew")
    f = skew_to_form(h)
    assert pf(f) == h.mat[0, 1]
    assert pf(f) ** 2 == oracle.det_oracle(h.mat)


def test_pf_standard_symplectic():
    f = ExteriorForm.from_coeffs(4, 2, {(0, 1): 1, (2, 3): 1})
    assert pf(f) == 1
    W = embed(f, 2)
    assert oracle.det_oracle(W.mat) == 1


def test_pf_top_form():
    f = ExteriorForm.unit(4, (0, 1, 2, 3))
    assert pf(f) == 1


@pytest.mark.parametrize("n", (2, 4, 6))
def test_pf_squared_is_det_skew(n):
    for seed in range(4):
        h = random_bilinear(n, 4000 + 10 * n + seed, "skew")
        f = skew_to_form(h)
        rec = check_pf_squared(f, 2)
        assert rec.asserted and rec.residual == 0
        assert pf(f) ** 2 == oracle.det_oracle(h.mat)


@pytest.mark.parametrize("n", (2, 4, 6))
def test_pf_matches_perfect_matching_oracle(n):
    for seed in range(4):
        h = random_bilinear(n, 4100 + 10 * n + seed, "skew")
        assert pf(skew_to_form(h)) == oracle.pf_matching_oracle(h.mat)


def test_pf_odd_degree_and_divisibility_errors():
    with pytest.raises(ValueError):
        pf(random_form(4, 3, 1))
    with pytest.raises(ValueError):
        pf(random_form(5, 2, 1))  # 5 not divisible by 2


def test_pf_homogeneity():
    # Pf is homogeneous of degree q = n / deg in the coefficients
    f = random_form(4, 2, 9)
    assert pf(3 * f) == 3 ** 2 * pf(f)
    f6 = random_form(6, 2, 10)
    assert pf(5 * f6) == 5 ** 3 * pf(f6)


def test_skew_to_form_round_trip():
    h = random_bilinear(5, 11, "skew")
    f = skew_to_form(h)
    back = embed(ExteriorForm(5, 2, f.coeffs.copy()), 2)
    assert back == h


def test_skew_to_form_rejects_non_skew():
    with pytest.raises(ValueError):
        skew_to_form(random_bilinear(4, 12, "symmetric"))


def test_embed_top_form_signs():
    f = ExteriorForm.unit(4, (0, 1, 2, 3))
    W = embed(f, 2)
    assert W.entry((0, 1), (2, 3)) == 1
    assert W.entry((0, 2), (1, 3)) == -1  # parity of (0,2,1,3)
    assert W.entry((0, 3), (1, 2)) == 1
    assert W.entry((0, 1), (0, 1)) == 0


def test_embed_symmetry_and_bianchi_structure():
    # embeddings are transpose-symmetric; the first-Bianchi sum of an
    # embedded 4-form is -3 times the form, so the residual is 3 max|coeff|
    for seed in (21, 22, 23):
        f = random_form(4, 4, seed)
        W = embed(f, 2)
        assert W == transpose(W)
        assert bianchi_residual(W) == 3 * f.max_abs()


def test_embed_divisibility():
    with pytest.raises(ValueError):
        embed(random_form(4, 3, 24), 2)


def test_hyperdet_of_bilinear_is_det():
    for n in (2, 3, 4):
        h = random_bilinear(n, 4200 + n)
        mf = double_form_as_multiform(h)
        assert hyperdet(mf) == oracle.det_oracle(h.mat)


def test_hyperdet_identity_pattern():
    from dfalg.dform import metric

    mf = double_form_as_multiform(metric(4))
    assert hyperdet(mf) == 1


def test_hyperdet_r1_reduces_to_star_power():
    from dfalg.exterior import MultiForm, wedge_form_power

    f = random_form(4, 2, 25)
    mf = MultiForm(4, 2, 1, f.coeffs.copy())
    assert hyperdet(mf) == wedge_form_power(f, 2).coeffs[0] * Fraction(1, 2)


def test_multiform_round_trip():
    h = random_bilinear(3, 26)
    assert multiform_as_double_form(double_form_as_multiform(h)) == h


def test_conjecture_record_four_form():
    # Pf^2 vs h_n of the embedded (2,2) form at n = 4: computed exactly,
    # reported with ratio, never asserted
    f = ExteriorForm.unit(4, (0, 1, 2, 3))
    rec = check_pf_squared(f, 2)
    assert not rec.asserted
    assert rec.lhs == 1 and rec.rhs == 6 and rec.ratio == 6
    f2 = random_form(4, 4, 27)
    rec2 = check_pf_squared(f2, 2)
    W = embed(f2, 2)
    assert rec2.rhs == hodge(wedge_power(W, 2)).scalar()
    assert rec2.lhs == pf(f2) ** 2


def test_conjecture_record_r3():
    f = random_form(6, 6, 28)
    rec = check_pf_squared(f, 3)
    assert not rec.asserted
    assert rec.lhs == pf(f) ** 3
    assert rec.rhs == hyperdet(embed(f, 3))
    again = check_pf_squared(f, 3)
    assert (str(rec.lhs), str(rec.rhs), str(rec.residual)) \
        == (str(again.lhs), str(again.rhs), str(again.residual))


def test_conjecture_json_shape():
    rec = check_pf_squared(random_form(4, 4, 29), 2)
    doc = rec.to_json()
    assert set(doc) == {"name", "params", "lhs", "rhs", "residual", "ratio",
                        "asserted"}


def test_embed_r3_against_direct_evaluation():
    # entries of the r = 3 embedding are signed coefficients on partitions
    f = ExteriorForm.unit(6, (0, 1, 2, 3, 4, 5))
    mf = embed(f, 3)
    assert mf.entry([(0, 1), (2, 3), (4, 5)]) == 1
    assert mf.entry([(0, 2), (1, 3), (4, 5)]) == -1
    assert mf.entry([(0, 1), (0, 2), (3, 4)]) == 0

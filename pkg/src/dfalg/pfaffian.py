"""Pfaffians of even-degree forms, multiform embeddings, hyperdeterminants.

A 2k-form on a space of dimension n = 2kq has the Pfaffian *(w^q/q!),
computed with the ordinary exterior product; the same coefficients read as
a (k, k) double form (or a (k,...,k) multiform) produce determinant-like
invariants through the double-form machinery.  For skew bilinear forms
Pf^2 = det is a theorem and is asserted; the corresponding relations for
higher forms are recorded with their exact residuals and ratios but are
not assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import scalars
from .dform import DoubleForm, transpose, wedge_power
from .exterior import ExteriorForm, MultiForm, hodge_multi, wedge_form_power, \
    wedge_multi_power
from .identities import IdentityResidual
from .invariants import s_k
from .multiindex import _rank_of, merge_sign_tuple, subsets


def pf(form: ExteriorForm):
    """Pfaffian *(w^q/q!) of a 2k-form on a space with n = 2kq."""
    n, d = form.n, form.k
    if d == 0 or d % 2:
        raise ValueError(f"the Pfaffian needs a nonzero even degree, got {d}")
    if n % d:
        raise ValueError(f"dimension {n} is not a multiple of the degree {d}")
    q = n // d
    top = wedge_form_power(form, q)
    return top.coeffs[0] * Fraction(1, factorial(q))


def skew_to_form(h: DoubleForm) -> ExteriorForm:
    """Read a skew (1, 1) form as the 2-form sum_{i<j} h_ij e^i ^ e^j."""
    if h.bidegree != (1, 1):
        raise ValueError(f"expected a (1, 1) form, got {h.bidegree}")
    if h != -transpose(h):
        raise ValueError("the bilinear form is not skew-symmetric")
    out = ExteriorForm.zeros(h.n, 2, h.field)
    for r, (i, j) in enumerate(subsets(h.n, 2)):
        out.coeffs[r] = h.mat[i, j]
    return out


def embed(form: ExteriorForm, r: int):
    """Read an rk-form as a multiform with r slots of degree k.

    Entries are plain evaluations on concatenated index blocks, with the
    merge sign and no normalization.  r = 2 returns the DoubleForm, which
    is transpose-symmetric; its first-Bianchi sum is -3 times the form for
    4-forms (full antisymmetry puts these in the complement of the Bianchi
    subspace, so no embedded nonzero form is Bianchi).
    """
    n, d = form.n, form.k
    if r < 2:
        raise ValueError("the embedding needs at least two slots")
    if d % r:
        raise ValueError(f"degree {d} is not a multiple of the slot count {r}")
    k = d // r
    blocks = subsets(n, k)
    if r == 2:
        out = DoubleForm.zeros(n, k, k, form.field)
        target = out.mat
    else:
        out = MultiForm.zeros(n, k, r, form.field)
        target = out.coeffs
    ranks = _rank_of(n, d)
    for idx in itertools.product(range(len(blocks)), repeat=r):
        sign = 1
        merged = blocks[idx[0]]
        for s in idx[1:]:
            hit = merge_sign_tuple(merged, blocks[s])
            if hit is None:
                sign = 0
                break
            sign *= hit[0]
            merged = hit[1]
        if sign:
            v = form.coeffs[ranks[merged]]
            if v != 0:
                target[idx] = sign * v
    return out


def double_form_as_multiform(w: DoubleForm) -> MultiForm:
    """Re-index a (k, k) double form as a two-slot multiform."""
    if w.p != w.q:
        raise ValueError("only square bidegrees correspond to two-slot multiforms")
    return MultiForm(w.n, w.p, 2, w.mat.copy(), w.field)


def multiform_as_double_form(mf: MultiForm) -> DoubleForm:
    """Re-index a two-slot multiform as a (k, k) double form."""
    if mf.r != 2:
        raise ValueError("only two-slot multiforms are double forms")
    return DoubleForm(mf.n, mf.k, mf.k, mf.coeffs.copy(), mf.field)


def hyperdet(mf: MultiForm):
    """Hyperdeterminant *(w^p/p!) of a (k,...,k) multiform with n = pk."""
    n, k = mf.n, mf.k
    if k == 0 or n % k:
        raise ValueError(f"dimension {n} is not a multiple of the slot degree {k}")
    p = n // k
    top = wedge_multi_power(mf, p)
    starred = hodge_multi(top)
    return starred.coeffs[(0,) * mf.r] * Fraction(1, factorial(p))


@dataclass
class ConjectureRecord:
    """Exact evaluation of a conjectured relation; reported, not asserted."""

    name: str
    params: dict
    lhs: object
    rhs: object
    asserted: bool

    @property
    def residual(self):
        return abs(self.lhs - self.rhs)

    @property
    def ratio(self):
        if self.lhs == 0:
            return None
        return Fraction(self.rhs) / Fraction(self.lhs) \
            if not isinstance(self.lhs, float) else self.rhs / self.lhs

    def to_json(self):
        return {
            "name": self.name,
            "params": self.params,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "residual": str(self.residual),
            "ratio": None if self.ratio is None else str(self.ratio),
            "asserted": self.asserted,
        }


def check_pf_squared(form: ExteriorForm, r: int = 2):
    """Compare Pf(w)^r against the determinant-like invariant of the embedding.

    For 2-forms (skew bilinear case) Pf^2 = det is a theorem and the result
    is asserted; for higher-degree forms the relation is recorded with its
    exact residual and ratio.
    """
    n, d = form.n, form.k
    value = pf(form)
    if r == 2:
        w = embed(form, 2)
        if d == 2:
            rhs = s_k(w, n)  # determinant of the skew bilinear form
            rec = ConjectureRecord("pf_squared_det", {"n": n, "degree": d},
                                   value * value, rhs, asserted=True)
            return rec
        # h_(0,n) of the embedded (k, k) form: star of its top wedge power
        from .dform import hodge as dform_hodge

        q_exp = n // (d // 2)
        rhs = dform_hodge(wedge_power(w, q_exp)).scalar()
        return ConjectureRecord("pf_squared_hn", {"n": n, "degree": d},
                                value * value, rhs, asserted=False)
    mf = embed(form, r)
    rhs = hyperdet(mf)
    return ConjectureRecord("pf_power_hyperdet", {"n": n, "degree": d, "r": r},
                            value ** r, rhs, asserted=False)


def conjecture_to_residual(rec: ConjectureRecord, field: str) -> IdentityResidual:
    """View an asserted conjecture record as an identity residual."""
    residual = rec.residual
    rel = None
    if field == scalars.FLOAT64:
        scale = max(1.0, abs(float(rec.lhs)), abs(float(rec.rhs)))
        rel = float(residual) / scale
    return IdentityResidual(rec.name, rec.params, residual, residual == 0,
                            "Pf(h)^2 = det(h)", rel, asserted=rec.asserted)

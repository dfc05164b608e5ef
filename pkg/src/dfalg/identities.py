"""Named algebraic identities as checkable predicates.

Each check recomputes both sides of one identity independently and returns
an IdentityResidual; in rational mode every residual must be literally
zero, so any nonzero value is an implementation bug, not a tolerance
problem.  run_suite drives the full battery over a fixture set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import scalars
from .dform import (
    DoubleForm,
    compose,
    compose_power,
    contract,
    contract_iter,
    hodge,
    inner,
    metric,
    metric_power,
    transpose,
    wedge,
    wedge_power,
)
from .invariants import h_2k, h_rpq, power_sums, s_all, s_k, s_rq, t_k


@dataclass
class IdentityResidual:
    """Outcome of one identity check."""

    name: str
    params: dict
    residual: object
    exact_zero: bool
    formula: str
    rel_residual: float | None = None
    asserted: bool = True

    @property
    def passed(self) -> bool:
        if self.rel_residual is not None:
            return self.rel_residual <= scalars.FLOAT_RELATIVE_TOLERANCE
        return self.exact_zero

    def to_json(self):
        doc = {
            "name": self.name,
            "params": self.params,
            "residual": str(self.residual),
            "exact_zero": bool(self.exact_zero),
            "passed": bool(self.passed),
            "asserted": bool(self.asserted),
            "formula": self.formula,
        }
        if self.rel_residual is not None:
            doc["rel_residual"] = float(self.rel_residual)
        return doc


def _scale_of(x):
    if isinstance(x, DoubleForm):
        return x.max_abs()
    return abs(x)


def _record(name, params, lhs, rhs, formula, field) -> IdentityResidual:
    diff = lhs - rhs
    residual = _scale_of(diff)
    rel = None
    if field == scalars.FLOAT64:
        scale = max(1.0, float(_scale_of(lhs)), float(_scale_of(rhs)))
        rel = float(residual) / scale
    return IdentityResidual(name, params, residual, residual == 0, formula, rel)


def _zero_like(x, n, field):
    if isinstance(x, DoubleForm):
        return DoubleForm.zeros(n, x.p, x.q, field)
    return scalars.coerce(0, field)


def _vanishing(name, params, value, formula, field, n) -> IdentityResidual:
    return _record(name, params, value, _zero_like(value, n, field), formula, field)


# ---------------------------------------------------------------------------
# bilinear-form identities


def check_cayley_hamilton(h: DoubleForm) -> IdentityResidual:
    """t_n(h) = sum_r (-1)^r s_(n-r)(h) (h^t)^(o r) vanishes."""
    n = h.n
    ss = s_all(h)
    ht = transpose(h)
    acc = DoubleForm.zeros(n, 1, 1, h.field)
    for r in range(n + 1):
        acc = acc + ((-1) ** r * ss[n - r]) * compose_power(ht, r)
    return _vanishing("cayley_hamilton", {"n": n}, acc, "t_n(h) = 0", h.field, n)


def check_general_CH(h: DoubleForm, r: int, i: int) -> IdentityResidual:
    """Extended cofactor vanishing s_(r, n-i)(h) = 0 for 1 <= i+1 <= r <= n-i."""
    n = h.n
    if not 1 <= i + 1 <= r <= n - i:
        raise ValueError(f"(r, i) = ({r}, {i}) outside the theorem range")
    val = s_rq(h, r, n - i, path="contraction")
    return _vanishing("general_cayley_hamilton", {"n": n, "r": r, "i": i}, val,
                      "s_(r, n-i)(h) = 0", h.field, n)


def general_CH_range(n: int):
    return [(r, i) for i in range(0, (n - 1) // 2 + 1)
            for r in range(i + 1, n - i + 1)]


def check_laplace(h: DoubleForm, k: int) -> IdentityResidual:
    """(k+1) s_(k+1)(h) = <t_k(h), h>."""
    n = h.n
    lhs = (k + 1) * s_k(h, k + 1)
    rhs = inner(t_k(h, k), h)
    return _record("laplace_expansion", {"n": n, "k": k}, lhs, rhs,
                   "(k+1) s_(k+1)(h) = <t_k(h), h>", h.field)


def check_laplace_refined(h: DoubleForm) -> IdentityResidual:
    """h^t o t_(n-1)(h) = s_n(h) g: the composition inverse of h."""
    n = h.n
    lhs = compose(transpose(h), t_k(h, n - 1))
    rhs = s_k(h, n) * metric(n, h.field)
    return _record("laplace_inverse", {"n": n}, lhs, rhs,
                   "h^t o t_(n-1)(h) = s_n(h) g", h.field)


def check_block_laplace(h: DoubleForm, r: int) -> IdentityResidual:
    """det(h) g^r/r! = (*(h^(n-r)/(n-r)!))^t o h^r/r!."""
    n = h.n
    if not 0 <= r <= n:
        raise ValueError(f"block size {r} out of range [0, {n}]")
    det = s_k(h, n)
    lhs = det * (metric_power(n, r, h.field) * Fraction(1, factorial(r)))
    star = hodge(wedge_power(h, n - r)) * Fraction(1, factorial(n - r))
    rhs = compose(transpose(star), wedge_power(h, r) * Fraction(1, factorial(r)))
    return _record("block_laplace", {"n": n, "r": r}, lhs, rhs,
                   "det(h) g^r/r! = (*(h^(n-r)/(n-r)!))^t o h^r/r!", h.field)


def check_lower_block(h: DoubleForm, k: int, p: int, q: int) -> IdentityResidual:
    """k!(n-k)! s_k(h) = <g^p h^q, *(g^(n-k-p) h^(k-q))>."""
    n = h.n
    if not (0 <= q <= k and 0 <= p <= n - k):
        raise ValueError(f"(k, p, q) = ({k}, {p}, {q}) outside the expansion range")
    lhs = factorial(k) * factorial(n - k) * s_k(h, k)
    a = wedge(metric_power(n, p, h.field), wedge_power(h, q))
    b = wedge(metric_power(n, n - k - p, h.field), wedge_power(h, k - q))
    rhs = inner(a, hodge(b))
    return _record("lower_block_laplace", {"n": n, "k": k, "p": p, "q": q}, lhs, rhs,
                   "k!(n-k)! s_k(h) = <g^p h^q, *(g^(n-k-p) h^(k-q))>", h.field)


def check_girard_newton(h: DoubleForm, k: int) -> IdentityResidual:
    """c t_k(h) = (n - k) s_k(h)."""
    n = h.n
    lhs = contract(t_k(h, k)).scalar()
    rhs = (n - k) * s_k(h, k)
    return _record("girard_newton", {"n": n, "k": k}, lhs, rhs,
                   "c t_k(h) = (n-k) s_k(h)", h.field)


def check_newton_recurrence(h: DoubleForm, r: int) -> IdentityResidual:
    """r s_r(h) = sum_i (-1)^(i+1) s_(r-i)(h) p_i."""
    n = h.n
    ps = power_sums(h, r)
    lhs = r * s_k(h, r)
    rhs = sum((-1) ** (i + 1) * s_k(h, r - i) * ps[i - 1] for i in range(1, r + 1))
    return _record("newton_recurrence", {"n": n, "r": r}, lhs, rhs,
                   "r s_r(h) = sum_i (-1)^(i+1) s_(r-i)(h) p_i", h.field)


def check_newton_srq(h: DoubleForm, r: int, q: int) -> IdentityResidual:
    """c s_(r,q)(h) = (n - q - r + 1) s_(r-1,q)(h)."""
    n = h.n
    if not (0 <= q <= n and 1 <= r <= n - q):
        raise ValueError(f"(r, q) = ({r}, {q}) outside the Newton range")
    lhs = contract(s_rq(h, r, q, path="hodge"))
    rhs = (n - q - r + 1) * s_rq(h, r - 1, q, path="hodge")
    return _record("newton_srq", {"n": n, "r": r, "q": q}, lhs, rhs,
                   "c s_(r,q)(h) = (n-q-r+1) s_(r-1,q)(h)", h.field)


def check_general_laplace_srq(h: DoubleForm, r: int, q: int) -> IdentityResidual:
    """(q+r)!/q! s_(q+r)(h) = <s_(r,q)(h), h^r>."""
    n = h.n
    if not (0 <= q <= n and 1 <= r <= n - q):
        raise ValueError(f"(r, q) = ({r}, {q}) outside the Laplace range")
    lhs = Fraction(factorial(q + r), factorial(q)) * s_k(h, q + r)
    rhs = inner(s_rq(h, r, q, path="hodge"), wedge_power(h, r))
    return _record("general_laplace_srq", {"n": n, "r": r, "q": q}, lhs, rhs,
                   "(q+r)!/q! s_(q+r)(h) = <s_(r,q)(h), h^r>", h.field)


def check_s2q_formula(h: DoubleForm, q: int) -> IdentityResidual:
    """(2q)! s_2q(h) = sum_r (-1)^(r+q)/(r!)^2 |c^r h^q|^2 for symmetric h.

    The constant is pinned by the general expansion of c^(2pq)(w^(2q)) at
    p = 1, whose left side is (2q)! s_2q(h); at q = 1 this is the classical
    2 s_2(h) = |ch|^2 - |h|^2.
    """
    n = h.n
    if n < 2 * q:
        raise ValueError(f"s_2q needs n >= 2q, got n = {n}, q = {q}")
    lhs = factorial(2 * q) * s_k(h, 2 * q)
    hq = wedge_power(h, q)
    rhs = 0
    for r in range(q + 1):
        c = contract_iter(hq, r)
        rhs += Fraction((-1) ** (r + q), factorial(r) ** 2) * inner(c, c)
    return _record("s2q_contraction_formula", {"n": n, "q": q}, lhs, rhs,
                   "(2q)! s_2q(h) = sum_r (-1)^(r+q)/(r!)^2 |c^r h^q|^2", h.field)


# ---------------------------------------------------------------------------
# (2, 2) double-form identities


def check_Tn(R: DoubleForm) -> IdentityResidual:
    """Top Einstein-Lovelock tensor vanishes in even dimension."""
    n = R.n
    if n % 2:
        raise ValueError("T_n(R) = 0 is an even-dimension identity")
    k = n // 2
    Rk = wedge_power(R, k)
    val = wedge(metric(n, R.field),
                contract_iter(Rk, n)) * Fraction(1, factorial(n)) \
        - contract_iter(Rk, n - 1) * Fraction(1, factorial(n - 1))
    return _vanishing("lovelock_top_even", {"n": n}, val, "T_n(R) = 0", R.field, n)


def check_Nn(R: DoubleForm) -> IdentityResidual:
    """Top second cofactor vanishes in even dimension."""
    n = R.n
    if n % 2:
        raise ValueError("N_n(R) = 0 is an even-dimension identity")
    k = n // 2
    Rk = wedge_power(R, k)
    val = contract_iter(Rk, n - 2) * Fraction(1, factorial(n - 2)) \
        - wedge(metric(n, R.field), contract_iter(Rk, n - 1)) * Fraction(1, factorial(n - 1)) \
        + wedge(metric_power(n, 2, R.field), contract_iter(Rk, n)) * Fraction(1, 2 * factorial(n))
    return _vanishing("second_cofactor_top_even", {"n": n}, val, "N_n(R) = 0",
                      R.field, n)


def check_Nn_minus_1(R: DoubleForm) -> IdentityResidual:
    """N_(n-1)(R) = 0 in odd dimension n >= 3."""
    n = R.n
    if n % 2 == 0 or n < 3:
        raise ValueError("N_(n-1)(R) = 0 is an odd-dimension identity, n >= 3")
    k = (n - 1) // 2
    Rk = wedge_power(R, k)
    val = contract_iter(Rk, n - 3) * Fraction(1, factorial(n - 3)) \
        - wedge(metric(n, R.field), contract_iter(Rk, n - 2)) * Fraction(1, factorial(n - 2)) \
        + wedge(metric_power(n, 2, R.field), contract_iter(Rk, n - 1)) * Fraction(1, 2 * factorial(n - 1))
    return _vanishing("second_cofactor_top_odd", {"n": n}, val, "N_(n-1)(R) = 0",
                      R.field, n)


def check_scalar_identity(R: DoubleForm) -> IdentityResidual:
    """Scalar vanishing in odd dimension built from the last three contractions."""
    n = R.n
    if n % 2 == 0 or n < 3:
        raise ValueError("the scalar identity needs odd dimension n >= 3")
    k = (n - 1) // 2
    Rk = wedge_power(R, k)
    val = inner(contract_iter(Rk, n - 3) * Fraction(1, factorial(n - 3)), R) \
        - inner(contract_iter(Rk, n - 2) * Fraction(1, factorial(n - 2)), contract(R)) \
        + inner(contract_iter(Rk, n - 1) * Fraction(1, factorial(n - 1)),
                contract_iter(R, 2) * Fraction(1, 2))
    return _vanishing("odd_scalar_identity", {"n": n}, val,
                      "<c^(n-3)R^k/(n-3)!, R> - <c^(n-2)R^k/(n-2)!, cR> "
                      "+ <c^(n-1)R^k/(n-1)!, c^2R/2> = 0", R.field, n)


def check_even_odd_theorem(R: DoubleForm, r: int, i: int) -> IdentityResidual:
    """Range vanishing of the extended (r, *) cofactors of a (2, 2) form."""
    n = R.n
    if n % 2 == 0:
        q_deg = n - 2 * i
        if not 2 * i + 1 <= r <= n - 2 * i:
            raise ValueError(f"(r, i) = ({r}, {i}) outside the even range")
    else:
        q_deg = n - 2 * i - 1
        if not 2 * i + 2 <= r <= n - 2 * i - 1:
            raise ValueError(f"(r, i) = ({r}, {i}) outside the odd range")
    val = h_rpq(R, r, 2, q_deg // 2, path="contraction")
    return _vanishing("cofactor_vanishing_22", {"n": n, "r": r, "i": i}, val,
                      "h_(r, n-2i)(R) = 0 (even n) / h_(r, n-2i-1)(R) = 0 (odd n)",
                      R.field, n)


def even_odd_range(n: int):
    out = []
    for i in range(0, n // 4 + 1):
        if n % 2 == 0:
            if n - 2 * i < 2:
                break
            out.extend((r, i) for r in range(2 * i + 1, n - 2 * i + 1))
        else:
            if n - 2 * i - 1 < 2:
                break
            out.extend((r, i) for r in range(2 * i + 2, n - 2 * i))
    return out


def check_avez(R: DoubleForm) -> IdentityResidual:
    """h_4(R) = |R|^2 - |cR|^2 + |c^2 R|^2 / 4."""
    n = R.n
    if n < 4:
        raise ValueError("the h_4 formula needs n >= 4")
    lhs = h_2k(R, 2, path="hodge")
    cR = contract(R)
    c2R = contract(cR).scalar()
    rhs = inner(R, R) - inner(cR, cR) + Fraction(1, 4) * c2R * c2R
    return _record("avez_h4", {"n": n}, lhs, rhs,
                   "h_4(R) = |R|^2 - |cR|^2 + |c^2R|^2/4", R.field)


def check_h2k2_corollary(R: DoubleForm, k: int) -> IdentityResidual:
    """h_(2k+2)(R) from the last three contractions of R^k."""
    n = R.n
    if not 4 <= 2 * k + 2 <= n:
        raise ValueError(f"order 2k+2 = {2 * k + 2} out of range [4, {n}]")
    lhs = h_2k(R, k + 1, path="hodge")
    Rk = wedge_power(R, k)
    h2k_val = contract_iter(Rk, 2 * k).scalar() * Fraction(1, factorial(2 * k))
    h2 = contract_iter(R, 2).scalar() * Fraction(1, 2)
    rhs = inner(contract_iter(Rk, 2 * k - 2) * Fraction(1, factorial(2 * k - 2)), R) \
        - inner(contract_iter(Rk, 2 * k - 1) * Fraction(1, factorial(2 * k - 1)),
                contract(R)) \
        + h2k_val * h2
    return _record("gauss_bonnet_recursion", {"n": n, "k": k}, lhs, rhs,
                   "h_(2k+2) = <c^(2k-2)R^k/(2k-2)!, R> - <c^(2k-1)R^k/(2k-1)!, cR> "
                   "+ h_2k h_2", R.field)


def check_general_avez(R: DoubleForm, q: int) -> IdentityResidual:
    """h_4q(R) = sum_r (-1)^r/(r!)^2 |c^r R^q|^2."""
    n = R.n
    if n < 4 * q:
        raise ValueError(f"the h_4q formula needs n >= 4q = {4 * q}")
    lhs = h_2k(R, 2 * q, path="hodge")
    Rq = wedge_power(R, q)
    rhs = 0
    for r in range(2 * q + 1):
        c = contract_iter(Rq, r)
        rhs += Fraction((-1) ** r, factorial(r) ** 2) * inner(c, c)
    return _record("general_avez", {"n": n, "q": q}, lhs, rhs,
                   "h_4q(R) = sum_r (-1)^r/(r!)^2 |c^r R^q|^2", R.field)


# ---------------------------------------------------------------------------
# (p, p) double-form identities


def check_higher_identities(w: DoubleForm, p: int, k: int, i: int,
                            r: int) -> IdentityResidual:
    """h_(r, pk - pi)(w) = 0 for n - pk + pi + 1 <= r <= pk - pi."""
    n = w.n
    if w.p != p:
        raise ValueError(f"form has slot degree {w.p}, expected {p}")
    m = k - i
    if m < 1 or p * m > n:
        raise ValueError(f"(k, i) = ({k}, {i}) gives no valid exponent")
    if not n - p * m + 1 <= r <= p * m:
        raise ValueError(f"r = {r} outside [{n - p * m + 1}, {p * m}]")
    val = h_rpq(w, r, p, m, path="contraction")
    return _vanishing("cofactor_vanishing_pp", {"n": n, "p": p, "k": k, "i": i, "r": r},
                      val, "h_(r, p(k-i))(w) = 0", w.field, n)


def higher_identity_range(n: int, p: int):
    """Valid (m, r) pairs with m = k - i the exponent of the form."""
    return [(m, r) for m in range(1, n // p + 1)
            for r in range(n - p * m + 1, p * m + 1)]


def check_newton_hrpq(w: DoubleForm, r: int, q: int) -> IdentityResidual:
    """c h_(r,pq)(w) = (n - pq - r + 1) h_(r-1,pq)(w)."""
    n, p = w.n, w.p
    if not 1 <= r <= n - p * q:
        raise ValueError(f"r = {r} outside the Newton range [1, {n - p * q}]")
    lhs = contract(h_rpq(w, r, p, q, path="hodge"))
    rhs = (n - p * q - r + 1) * h_rpq(w, r - 1, p, q, path="hodge")
    return _record("newton_hrpq", {"n": n, "p": p, "r": r, "q": q}, lhs, rhs,
                   "c h_(r,pq)(w) = (n-pq-r+1) h_(r-1,pq)(w)", w.field)


def check_general_laplace_pp(w: DoubleForm, q: int) -> IdentityResidual:
    """Three expressions for c^(2pq)(w^(2q))/(2pq)! agree."""
    n, p = w.n, w.p
    if n < 2 * p * q:
        raise ValueError(f"needs n >= 2pq = {2 * p * q}")
    pq = p * q
    a = contract_iter(wedge_power(w, 2 * q), 2 * pq).scalar() \
        * Fraction(1, factorial(2 * pq))
    wq = wedge_power(w, q)
    b = inner(h_rpq(w, pq, p, q, path="hodge"), wq)
    c = 0
    for r in range(pq + 1):
        cr = contract_iter(wq, r)
        c += Fraction((-1) ** (r + pq), factorial(r) ** 2) * inner(cr, cr)
    worst = max(_scale_of(a - b), _scale_of(a - c))
    rec = IdentityResidual("laplace_pp", {"n": n, "p": p, "q": q}, worst,
                           worst == 0,
                           "c^(2pq)(w^2q)/(2pq)! = <h_(pq,pq)(w), w^q> "
                           "= sum_r (-1)^(r+pq)/(r!)^2 |c^r w^q|^2")
    if w.field == scalars.FLOAT64:
        scale = max(1.0, abs(float(a)), abs(float(b)), abs(float(c)))
        rec.rel_residual = float(worst) / scale
    return rec


# ---------------------------------------------------------------------------
# suite driver

ALL_IDENTITY_NAMES = (
    "cayley_hamilton",
    "general_cayley_hamilton",
    "laplace_expansion",
    "laplace_inverse",
    "block_laplace",
    "lower_block_laplace",
    "girard_newton",
    "newton_recurrence",
    "newton_srq",
    "general_laplace_srq",
    "s2q_contraction_formula",
    "lovelock_top_even",
    "second_cofactor_top_even",
    "second_cofactor_top_odd",
    "odd_scalar_identity",
    "cofactor_vanishing_22",
    "avez_h4",
    "gauss_bonnet_recursion",
    "general_avez",
    "cofactor_vanishing_pp",
    "newton_hrpq",
    "laplace_pp",
)


def run_suite(fixture_sets, mode: str = "exact", only: str | None = None):
    """Run every identity check over the given fixture sets.

    fixture_sets is an iterable of fixtures.SuiteFixtures.  Records are
    sorted by identity name and parameters; exact mode demands literal
    zeros, float mode a relative residual within tolerance.
    """
    if only is not None and only not in ALL_IDENTITY_NAMES:
        raise ValueError(f"unknown identity {only!r}; known: "
                         + ", ".join(ALL_IDENTITY_NAMES))
    field = scalars.FLOAT64 if mode == "float" else scalars.RATIONAL
    records = []

    def add(rec):
        if only is None or rec.name == only:
            records.append(rec)

    def wanted(*names):
        return only is None or only in names

    for fx in fixture_sets:
        n = fx.n

        for label, h in fx.bilinear:
            tag = {"n": n, "fixture": label}
            if wanted("cayley_hamilton"):
                add(_tag(check_cayley_hamilton(h), tag))
            if wanted("laplace_inverse"):
                add(_tag(check_laplace_refined(h), tag))
            if wanted("laplace_expansion"):
                for k in range(n):
                    add(_tag(check_laplace(h, k), tag))
            if wanted("block_laplace"):
                for r in range(n + 1):
                    add(_tag(check_block_laplace(h, r), tag))
            if wanted("lower_block_laplace"):
                for k in range(1, n + 1):
                    for q in range(k + 1):
                        for p in range(n - k + 1):
                            add(_tag(check_lower_block(h, k, p, q), tag))
            if wanted("girard_newton"):
                for k in range(n):
                    add(_tag(check_girard_newton(h, k), tag))
            if wanted("newton_recurrence"):
                for r in range(1, n + 1):
                    add(_tag(check_newton_recurrence(h, r), tag))
            if wanted("newton_srq"):
                for q in range(n + 1):
                    for r in range(1, n - q + 1):
                        add(_tag(check_newton_srq(h, r, q), tag))
            if wanted("general_laplace_srq"):
                for q in range(n + 1):
                    for r in range(1, n - q + 1):
                        add(_tag(check_general_laplace_srq(h, r, q), tag))

        for label, h in fx.bilinear_symmetric:
            tag = {"n": n, "fixture": label}
            if wanted("general_cayley_hamilton"):
                for r, i in general_CH_range(n):
                    add(_tag(check_general_CH(h, r, i), tag))
            if wanted("s2q_contraction_formula"):
                for q in range(1, n // 2 + 1):
                    add(_tag(check_s2q_formula(h, q), tag))

        for label, R in fx.bianchi2:
            tag = {"n": n, "fixture": label}
            if n % 2 == 0:
                if wanted("lovelock_top_even"):
                    add(_tag(check_Tn(R), tag))
                if wanted("second_cofactor_top_even"):
                    add(_tag(check_Nn(R), tag))
            else:
                if n >= 3 and wanted("second_cofactor_top_odd"):
                    add(_tag(check_Nn_minus_1(R), tag))
                if n >= 3 and wanted("odd_scalar_identity"):
                    add(_tag(check_scalar_identity(R), tag))
            if wanted("cofactor_vanishing_22"):
                for r, i in even_odd_range(n):
                    add(_tag(check_even_odd_theorem(R, r, i), tag))
            if n >= 4 and wanted("avez_h4"):
                add(_tag(check_avez(R), tag))
            if wanted("gauss_bonnet_recursion"):
                for k in range(1, (n - 2) // 2 + 1):
                    add(_tag(check_h2k2_corollary(R, k), tag))
            if n >= 4 and wanted("general_avez"):
                for q in range(1, n // 4 + 1):
                    add(_tag(check_general_avez(R, q), tag))
            if wanted("newton_hrpq"):
                for q in range(1, n // 2 + 1):
                    for r in range(1, n - 2 * q + 1):
                        add(_tag(check_newton_hrpq(R, r, q), tag))
            if wanted("laplace_pp"):
                for q in range(1, n // 4 + 1):
                    add(_tag(check_general_laplace_pp(R, q), tag))

        for label, w3 in fx.bianchi3:
            tag = {"n": n, "fixture": label}
            if wanted("cofactor_vanishing_pp"):
                for m, r in higher_identity_range(n, 3):
                    add(_tag(check_higher_identities(w3, 3, m, 0, r), tag))
            if wanted("newton_hrpq"):
                for q in range(1, n // 3 + 1):
                    for r in range(1, n - 3 * q + 1):
                        add(_tag(check_newton_hrpq(w3, r, q), tag))
            if wanted("laplace_pp") and n >= 6:
                add(_tag(check_general_laplace_pp(w3, 1), tag))

    records.sort(key=lambda rec: (rec.name, sorted(rec.params.items(), key=_param_key)))
    return records


def _param_key(item):
    return (item[0], str(item[1]))


def _tag(rec: IdentityResidual, tag: dict) -> IdentityResidual:
    rec.params = {**tag, **rec.params}
    return rec

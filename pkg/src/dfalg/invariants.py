"""Invariant families of bilinear forms and higher double forms.

Scalar invariants s_k (characteristic coefficients), cofactor / Newton
transformations t_k and s_(r,q) of bilinear forms, Gauss-Bonnet scalars
h_2k with their Einstein-Lovelock cofactors T_2k and N_2k for (2,2)
forms, and the general (r, pq) cofactors of (p,p) forms.

Every family has a Hodge-star definition and an equivalent expansion in
powers of the metric and contractions; both paths are implemented and, on
the overlap of their domains, must agree.  The contraction path is the one
that extends the transformations past the top degree, which is where the
generalized vanishing identities live (module identities).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, factorial

from . import scalars
from .dform import (
    DoubleForm,
    compose_power,
    contract,
    contract_iter,
    contract_with_metric,
    hodge,
    inner,
    metric,
    metric_power,
    transpose,
    wedge,
    wedge_power,
)
from .multiindex import rank_tuple


def _check_bilinear(h):
    if h.bidegree != (1, 1):
        raise ValueError(f"expected a (1, 1) form, got bidegree {h.bidegree}")


def _check_square(w, p):
    if w.bidegree != (p, p):
        raise ValueError(f"expected a ({p}, {p}) form, got bidegree {w.bidegree}")


def is_symmetric(w):
    return w == transpose(w)


# ---------------------------------------------------------------------------
# characteristic coefficients of bilinear forms


def s_k(h: DoubleForm, k: int, path: str = "hodge"):
    """k-th characteristic coefficient: trace for k = 1, determinant for k = n."""
    _check_bilinear(h)
    n = h.n
    if not 0 <= k <= n:
        raise ValueError(f"s_k order {k} out of range [0, {n}]")
    if k == 0:
        return scalars.coerce(1, h.field)
    if path == "hodge":
        w = wedge(metric_power(n, n - k, h.field), wedge_power(h, k))
        return (hodge(w) * Fraction(1, factorial(k) * factorial(n - k))).scalar()
    if path == "contraction":
        return (contract_iter(wedge_power(h, k), k)
                * Fraction(1, factorial(k) ** 2)).scalar()
    raise ValueError(f"unknown path {path!r}")


def s_all(h: DoubleForm, path: str = "hodge"):
    return [s_k(h, k, path) for k in range(h.n + 1)]


def sectional_value(h: DoubleForm, k: int, r: int, subset):
    """Diagonal value of g^k h^r at a multi-index of size k + r.

    Equals k! r! times the s_r invariant of h restricted to the subset.
    """
    _check_bilinear(h)
    n = h.n
    subset = tuple(subset)
    if len(subset) != k + r:
        raise ValueError(f"subset size {len(subset)} does not match k + r = {k + r}")
    if k + r > n:
        raise ValueError("subset degree exceeds the dimension")
    w = wedge(metric_power(n, k, h.field), wedge_power(h, r))
    ri = rank_tuple(subset, n)
    return w.mat[ri, ri]


def t_k(h: DoubleForm, k: int, path: str = "hodge") -> DoubleForm:
    """k-th cofactor (Newton) transformation; t_0 = g, t_(n-1) = cofactor matrix."""
    _check_bilinear(h)
    n = h.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"t_k order {k} out of range [0, {n - 1}]")
    if path == "hodge":
        w = wedge(metric_power(n, n - 1 - k, h.field), wedge_power(h, k))
        return hodge(w) * Fraction(1, factorial(k) * factorial(n - 1 - k))
    if path == "contraction":
        return s_rq(h, 1, k, path="contraction")
    raise ValueError(f"unknown path {path!r}")


def s_rq(h: DoubleForm, r: int, q: int, path: str = "auto") -> DoubleForm:
    """(r, q) cofactor transformation of a bilinear form, an (r, r) form.

    The Hodge-star definition covers r <= n - q; the expansion in metric
    powers and contractions extends it to all r <= n, which is required by
    the generalized vanishing theorems.  The extension assumes h symmetric.
    """
    _check_bilinear(h)
    n = h.n
    if not (0 <= q <= n and 0 <= r <= n):
        raise ValueError(f"(r, q) = ({r}, {q}) out of range for dimension {n}")
    if path == "auto":
        path = "hodge" if r <= n - q else "contraction"
    if path == "hodge":
        if r > n - q:
            raise ValueError(f"Hodge-star path needs r <= n - q, got ({r}, {q})")
        w = wedge(metric_power(n, n - q - r, h.field), wedge_power(h, q))
        return hodge(w) * Fraction(1, factorial(q) * factorial(n - q - r))
    if path == "contraction":
        if r > n - q and not is_symmetric(h):
            raise ValueError("the extended (r, q) cofactor assumes a symmetric form")
        out = DoubleForm.zeros(n, r, r, h.field)
        hq = wedge_power(h, q)
        for i in range(max(0, q - r), q + 1):
            m = i + r - q
            if m > n:
                continue
            coeff = Fraction((-1) ** (i + q), factorial(i) * factorial(q) * factorial(m))
            term = wedge(metric_power(n, m, h.field), contract_iter(hq, i))
            out = out + term * coeff
        return out
    raise ValueError(f"unknown path {path!r}")


def power_sums(h: DoubleForm, r: int):
    """Traces p_i of the first r composition powers of h."""
    _check_bilinear(h)
    out = []
    acc = h
    for i in range(1, r + 1):
        out.append(contract(acc).scalar())
        if i < r:
            acc = DoubleForm(h.n, 1, 1, acc.mat.dot(h.mat), h.field)
    return out


def s_k_of_sum(A: DoubleForm, B: DoubleForm, k: int):
    """s_k(A + B) expanded through the (r, q) cofactors of A."""
    _check_bilinear(A)
    _check_bilinear(B)
    if A.n != B.n:
        raise ValueError("mismatched dimensions")
    total = 0
    for i in range(k + 1):
        term = inner(s_rq(A, k - i, i, path="hodge"), wedge_power(B, k - i))
        total += Fraction(1, factorial(k - i)) * term
    return scalars.coerce(total, A.field)


# ---------------------------------------------------------------------------
# Gauss-Bonnet invariants of (2, 2) double forms


def h_2k(R: DoubleForm, k: int, path: str = "hodge"):
    """2k-th Gauss-Bonnet scalar of a symmetric (2, 2) Bianchi form."""
    _check_square(R, 2)
    n = R.n
    if not 0 <= 2 * k <= n:
        raise ValueError(f"h_2k order 2k = {2 * k} out of range [0, {n}]")
    if k == 0:
        return scalars.coerce(1, R.field)
    if path == "hodge":
        w = wedge(metric_power(n, n - 2 * k, R.field), wedge_power(R, k))
        return (hodge(w) * Fraction(1, factorial(n - 2 * k))).scalar()
    if path == "contraction":
        return (contract_iter(wedge_power(R, k), 2 * k)
                * Fraction(1, factorial(2 * k))).scalar()
    raise ValueError(f"unknown path {path!r}")


def T_2k(R: DoubleForm, k: int, path: str = "hodge") -> DoubleForm:
    """Einstein-Lovelock tensor of order 2k; T_2 is the Einstein tensor."""
    _check_square(R, 2)
    n = R.n
    if not 2 <= 2 * k <= n - 1:
        raise ValueError(f"T_2k order 2k = {2 * k} out of range [2, {n - 1}]")
    if path == "hodge":
        w = wedge(metric_power(n, n - 2 * k - 1, R.field), wedge_power(R, k))
        return hodge(w) * Fraction(1, factorial(n - 2 * k - 1))
    if path == "contraction":
        Rk = wedge_power(R, k)
        first = wedge(metric(n, R.field),
                      contract_iter(Rk, 2 * k)) * Fraction(1, factorial(2 * k))
        second = contract_iter(Rk, 2 * k - 1) * Fraction(1, factorial(2 * k - 1))
        return first - second
    raise ValueError(f"unknown path {path!r}")


def N_2k(R: DoubleForm, k: int, path: str = "hodge") -> DoubleForm:
    """Second cofactor of order 2k, a symmetric (2, 2) Bianchi form."""
    _check_square(R, 2)
    n = R.n
    if not 2 <= 2 * k <= n - 2:
        raise ValueError(f"N_2k order 2k = {2 * k} out of range [2, {n - 2}]")
    if path == "hodge":
        w = wedge(metric_power(n, n - 2 * k - 2, R.field), wedge_power(R, k))
        return hodge(w) * Fraction(1, factorial(n - 2 * k - 2))
    if path == "contraction":
        Rk = wedge_power(R, k)
        first = contract_iter(Rk, 2 * k - 2) * Fraction(1, factorial(2 * k - 2))
        second = wedge(metric(n, R.field), contract_iter(Rk, 2 * k - 1)) \
            * Fraction(1, factorial(2 * k - 1))
        third = wedge(metric_power(n, 2, R.field), contract_iter(Rk, 2 * k)) \
            * Fraction(1, 2 * factorial(2 * k))
        return first - second + third
    raise ValueError(f"unknown path {path!r}")


def h_rpq(w: DoubleForm, r: int, p: int, q: int, path: str = "auto") -> DoubleForm:
    """(r, pq) cofactor transformation of a symmetric (p, p) Bianchi form.

    Specializations: p = 1 gives q! s_(r,q); p = 2 gives h_2q, T_2q, N_2q
    at r = 0, 1, 2.  The contraction expansion extends r past n - pq.
    """
    _check_square(w, p)
    n = w.n
    pq = p * q
    if r < 0 or q < 0 or pq > n:
        raise ValueError(f"(r, pq) = ({r}, {pq}) out of range for dimension {n}")
    if path == "auto":
        path = "hodge" if r <= n - pq else "contraction"
    if path == "hodge":
        if r > n - pq:
            raise ValueError(f"Hodge-star path needs r <= n - pq = {n - pq}, got {r}")
        out = wedge(metric_power(n, n - pq - r, w.field), wedge_power(w, q))
        return hodge(out) * Fraction(1, factorial(n - pq - r))
    if path == "contraction":
        out = DoubleForm.zeros(n, r, r, w.field)
        wq = wedge_power(w, q)
        for i in range(max(0, pq - r), pq + 1):
            m = r - pq + i
            if m > n:
                continue
            coeff = Fraction((-1) ** (i + pq), factorial(i) * factorial(m))
            out = out + wedge(metric_power(n, m, w.field),
                              contract_iter(wq, i)) * coeff
        return out
    raise ValueError(f"unknown path {path!r}")


def g_power_star_expansion(w: DoubleForm, m: int) -> DoubleForm:
    """*(g^m w)/m! of a (p, p) Bianchi form, via the contraction series."""
    p = w.p
    _check_square(w, p)
    n = w.n
    k = m + p
    if not p <= k <= n:
        raise ValueError(f"total degree {k} out of range [{p}, {n}]")
    out = DoubleForm.zeros(n, n - k, n - k, w.field)
    for r in range(max(0, p - n + k), p + 1):
        mm = n - k - p + r
        coeff = Fraction((-1) ** (r + p), factorial(r) * factorial(mm))
        out = out + wedge(metric_power(n, mm, w.field),
                          contract_iter(w, r)) * coeff
    return out


# ---------------------------------------------------------------------------
# characteristic polynomials


@dataclass
class CharPoly:
    """Polynomial in one variable whose coefficients may be scalars or forms.

    coeffs[i] multiplies the i-th power of the variable.
    """

    family: str
    coeffs: list = dc_field(default_factory=list)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


def char_poly_s(h: DoubleForm) -> CharPoly:
    """det(h - x g) with coefficients given by the s_k invariants."""
    n = h.n
    return CharPoly("s", [(-1) ** m * s_k(h, n - m) for m in range(n + 1)])


def char_poly_t(h: DoubleForm) -> CharPoly:
    """Cofactor characteristic polynomial t_(n-1)(h - x g); form coefficients."""
    n = h.n
    return CharPoly("t", [(-1) ** m * t_k(h, n - 1 - m) for m in range(n)])


def char_poly_srq(h: DoubleForm, r: int) -> CharPoly:
    """*((h - x g)^(n-r))/(n-r)! expanded through the (r, q) cofactors."""
    n = h.n
    if not 1 <= r <= n:
        raise ValueError(f"cofactor order {r} out of range [1, {n}]")
    return CharPoly("srq",
                    [(-1) ** m * s_rq(h, r, n - r - m, path="hodge")
                     for m in range(n - r + 1)])


def char_poly_hn(R: DoubleForm) -> CharPoly:
    """h_n(R - x g^2/2) for even n, with coefficients from the h_2i scalars."""
    n = R.n
    if n % 2:
        raise ValueError("the h_n characteristic polynomial needs even dimension")
    k = n // 2
    coeffs = []
    for m in range(k + 1):
        c = comb(k, k - m) * Fraction((-1) ** m, 2 ** m) * factorial(2 * m) \
            * h_2k(R, k - m)
        coeffs.append(c)
    return CharPoly("hn", coeffs)


# ---------------------------------------------------------------------------
# exact polynomial interpolation and Jacobi-type derivative identities


def interpolate(points):
    """Exact coefficients of the polynomial through (x, y) sample points.

    Scalar y values give scalar coefficients; DoubleForm values work too
    since the Lagrange weights only scale and add them.
    """
    pts = list(points)
    deg = len(pts) - 1
    coeffs = None
    for i, (xi, yi) in enumerate(pts):
        # Lagrange basis polynomial for node i, as a coefficient list
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            denom *= Fraction(xi - xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d] += c * (-xj)
                new[d + 1] += c
            basis = new
        scaled = [c / denom for c in basis]
        terms = [yi * c for c in scaled] + [yi * Fraction(0)] * (deg + 1 - len(scaled))
        if coeffs is None:
            coeffs = terms
        else:
            coeffs = [a + b for a, b in zip(coeffs, terms)]
    return coeffs


def poly_coeff_of_t(fn, degree: int):
    """Coefficient of t in the polynomial t -> fn(t), sampled exactly."""
    pts = [(t, fn(t)) for t in range(degree + 1)]
    coeffs = interpolate(pts)
    return coeffs[1] if len(coeffs) > 1 else 0


def jacobi_derivative(h0: DoubleForm, v: DoubleForm, k: int):
    """d/dt s_k(h0 + t v) at t = 0 versus the cofactor pairing <t_(k-1), v>."""
    _check_bilinear(h0)
    _check_bilinear(v)
    if not 1 <= k <= h0.n:
        raise ValueError(f"order {k} out of range [1, {h0.n}]")
    lhs = poly_coeff_of_t(lambda t: s_k(h0 + t * v, k), k)
    rhs = inner(t_k(h0, k - 1), v)
    return lhs, rhs


def jacobi_double_form(R0: DoubleForm, V: DoubleForm, k: int):
    """d/dt h_2k(R0 + t V) at t = 0 versus <k N_(2k-2)(R0), V>."""
    _check_square(R0, 2)
    _check_square(V, 2)
    if not 1 <= 2 * k <= R0.n:
        raise ValueError(f"order 2k = {2 * k} out of range [2, {R0.n}]")
    lhs = poly_coeff_of_t(lambda t: h_2k(R0 + t * V, k), k)
    if k == 1:
        # N_0 = g^2/2
        N = metric_power(R0.n, 2, R0.field) * Fraction(1, 2)
    else:
        N = N_2k(R0, k - 1)
    rhs = inner(k * N, V)
    return lhs, rhs


# -- metric-variation variants ----------------------------------------------
#
# When the metric varies, invariants are computed with the metric
# contraction c_G in place of c; every sampled value is then a rational
# function N(t)/det(G(t))^m whose numerator degree is bounded, so the
# derivative at t = 0 comes out of exact interpolation of N and det(G).


def s_k_metric(h: DoubleForm, G: DoubleForm, k: int):
    """s_k of h measured in the metric G: full G-contraction of h^k."""
    _check_bilinear(h)
    if k == 0:
        return scalars.coerce(1, h.field)
    acc = wedge_power(h, k)
    for _ in range(k):
        acc = contract_with_metric(acc, G)
    return (acc * Fraction(1, factorial(k) ** 2)).scalar()


def h_2k_metric(R: DoubleForm, G: DoubleForm, k: int):
    """h_2k of R measured in the metric G: full G-contraction of R^k."""
    _check_square(R, 2)
    if k == 0:
        return scalars.coerce(1, R.field)
    acc = wedge_power(R, k)
    for _ in range(2 * k):
        acc = contract_with_metric(acc, G)
    return (acc * Fraction(1, factorial(2 * k))).scalar()


def _det_bilinear(G: DoubleForm):
    return s_k(G, G.n)


def _rational_derivative_at_zero(sample_fn, metric_fn, m: int, num_degree: int, n: int):
    """d/dt at 0 of f(t) = N(t)/det(G(t))^m with N polynomial, det(G(0)) = 1.

    Samples at integer points (skipping any where G degenerates), then
    interpolates N and D = det(G) exactly.
    """
    need_n = num_degree + 1
    xs, ys, ds = [], [], []
    t = 0
    while len(xs) < max(need_n, n + 1):
        G = metric_fn(t)
        d = _det_bilinear(G)
        if d != 0:
            xs.append(t)
            ds.append(d)
            ys.append(sample_fn(t) * d ** m)
        t += 1
    ncoef = interpolate(list(zip(xs, ys))[:need_n])
    dcoef = interpolate(list(zip(xs, ds))[:n + 1])
    n0 = ncoef[0]
    n1 = ncoef[1] if len(ncoef) > 1 else 0
    d1 = dcoef[1] if len(dcoef) > 1 else 0
    return n1 - m * n0 * d1


def jacobi_with_metric(h0: DoubleForm, v: DoubleForm, g0: DoubleForm,
                       w: DoubleForm, k: int):
    """Metric-variation Jacobi identity for s_k at t = 0.

    h(t) = h0 + t v and G(t) = g0 + t w with g0 the identity metric in the
    canonical frame.  Returns (d/dt s_k, <t_(k-1), v> + <t_k - s_k g, w>).
    """
    _check_bilinear(h0)
    _check_bilinear(v)
    _check_bilinear(w)
    n = h0.n
    if g0 != metric(n, g0.field):
        raise ValueError("the varying-metric identity is stated at the "
                         "canonical frame, g0 must be the identity metric")
    if not is_symmetric(w):
        raise ValueError("the metric variation must be symmetric")
    if not 1 <= k <= n:
        raise ValueError(f"order {k} out of range [1, {n}]")

    def sample(t):
        return s_k_metric(h0 + t * v, g0 + t * w, k)

    # s_k(h, G) det(G) is a coefficient of det(H - x G): degree <= n in t
    lhs = _rational_derivative_at_zero(sample, lambda t: g0 + t * w, 1, n, n)
    rhs = inner(t_k(h0, k - 1), v) + inner(t_or_top(h0, k) - s_k(h0, k) * metric(n, h0.field), w)
    return lhs, rhs


def t_or_top(h: DoubleForm, k: int) -> DoubleForm:
    """t_k extended to k = n through the composition-power expansion."""
    n = h.n
    if k <= n - 1:
        return t_k(h, k)
    if k == n:
        out = DoubleForm.zeros(n, 1, 1, h.field)
        ht = transpose(h)
        for r in range(n + 1):
            out = out + ((-1) ** r * s_k(h, n - r)) * compose_power(ht, r)
        return out
    raise ValueError(f"t_k order {k} exceeds the dimension {n}")


def jacobi_double_form_with_metric(R0: DoubleForm, V: DoubleForm, g0: DoubleForm,
                                   w: DoubleForm, k: int):
    """Metric-variation Jacobi identity for h_2k at t = 0.

    Returns (d/dt h_2k, <k N_(2k-2), V> + <T_2k - h_2k g, w>).
    """
    _check_square(R0, 2)
    _check_square(V, 2)
    n = R0.n
    if g0 != metric(n, g0.field):
        raise ValueError("the varying-metric identity is stated at the "
                         "canonical frame, g0 must be the identity metric")
    if not is_symmetric(w):
        raise ValueError("the metric variation must be symmetric")
    if not 1 <= 2 * k <= n - 1:
        raise ValueError(f"order 2k = {2 * k} out of range [2, {n - 1}] "
                         "(T_2k enters the right-hand side)")

    def sample(t):
        return h_2k_metric(R0 + t * V, g0 + t * w, k)

    # 2k metric contractions each contribute adj(G)/det(G); R(t)^k entries
    # have degree k, so N(t) = f det^[2k] has degree <= 2k(n-1) + k
    num_degree = 2 * k * (n - 1) + k
    lhs = _rational_derivative_at_zero(sample, lambda t: g0 + t * w, 2 * k,
                                       num_degree, n)
    if k == 1:
        N = metric_power(n, 2, R0.field) * Fraction(1, 2)
    else:
        N = N_2k(R0, k - 1)
    rhs = inner(k * N, V) + inner(T_2k(R0, k) - h_2k(R0, k) * metric(n, R0.field), w)
    return lhs, rhs

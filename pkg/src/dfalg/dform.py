"""Dense double forms and their algebra.

A (p, q) double form on an n-dimensional Euclidean space is stored as the
C(n,p) x C(n,q) matrix of its values on lexicographically ordered basis
multi-vectors: entry[rank(I), rank(J)] = w(e_I, e_J).  The identification
with multilinear forms uses the shuffle convention (no 1/k! weights), so
the k-th exterior power of a bilinear form h evaluates to k! times the
corresponding minor determinant.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from . import scalars
from .multiindex import (
    MAX_DIM,
    complement_table,
    insertion_table,
    merge_sign_tuple,
    merge_table,
    rank_tuple,
    split_table,
    subsets,
)


class DoubleForm:
    """Immutable-by-convention dense (p, q) double form."""

    __slots__ = ("n", "p", "q", "mat", "field")

    def __init__(self, n, p, q, mat, field=scalars.RATIONAL):
        if not 0 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in [0, {MAX_DIM}], got {n}")
        if p < 0 or q < 0:
            raise ValueError(f"bidegree ({p}, {q}) must be non-negative")
        scalars.check_field(field)
        mat = np.asarray(mat)
        shape = (comb(n, p), comb(n, q))
        if mat.shape != shape:
            raise ValueError(f"matrix shape {mat.shape} does not match bidegree "
                             f"({p}, {q}) in dimension {n}, expected {shape}")
        self.n = n
        self.p = p
        self.q = q
        self.mat = mat
        self.field = field

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, n, p, q, field=scalars.RATIONAL):
        dtype = float if field == scalars.FLOAT64 else object
        mat = np.zeros((comb(n, p), comb(n, q)), dtype=dtype)
        return cls(n, p, q, mat, field)

    @classmethod
    def from_entries(cls, n, p, q, entries, field=scalars.RATIONAL):
        """Build from a {(I, J): value} mapping of ascending index tuples."""
        out = cls.zeros(n, p, q, field)
        for (I, J), v in entries.items():
            out.mat[rank_tuple(tuple(I), n), rank_tuple(tuple(J), n)] = scalars.coerce(v, field)
        return out

    # -- basic structure ---------------------------------------------------

    @property
    def bidegree(self):
        return (self.p, self.q)

    def entry(self, I, J):
        return self.mat[rank_tuple(tuple(I), self.n), rank_tuple(tuple(J), self.n)]

    def scalar(self):
        """The single value of a (0, 0) form."""
        if self.p != 0 or self.q != 0:
            raise ValueError(f"bidegree ({self.p}, {self.q}) form is not a scalar")
        return self.mat[0, 0]

    def max_abs(self):
        if self.mat.size == 0:
            return 0
        return max(abs(v) for v in self.mat.flat)

    def is_zero(self):
        return all(v == 0 for v in self.mat.flat)

    def astype(self, field):
        if field == self.field:
            return self
        if field == scalars.FLOAT64:
            return DoubleForm(self.n, self.p, self.q, self.mat.astype(float), field)
        mat = np.empty(self.mat.shape, dtype=object)
        for idx, v in np.ndenumerate(self.mat):
            mat[idx] = scalars.coerce(v, field)
        return DoubleForm(self.n, self.p, self.q, mat, field)

    def copy(self):
        return DoubleForm(self.n, self.p, self.q, self.mat.copy(), self.field)

    def __repr__(self):
        return f"DoubleForm(n={self.n}, p={self.p}, q={self.q}, field={self.field!r})"

    # -- linear structure ---------------------------------------------------

    def _check_compatible(self, other):
        if self.n != other.n or self.field != other.field:
            raise ValueError("incompatible double forms")

    def __add__(self, other):
        self._check_compatible(other)
        if self.bidegree != other.bidegree:
            raise ValueError(f"cannot add bidegrees {self.bidegree} and {other.bidegree}")
        return DoubleForm(self.n, self.p, self.q, self.mat + other.mat, self.field)

    def __sub__(self, other):
        self._check_compatible(other)
        if self.bidegree != other.bidegree:
            raise ValueError(f"cannot subtract bidegrees {self.bidegree} and {other.bidegree}")
        return DoubleForm(self.n, self.p, self.q, self.mat - other.mat, self.field)

    def __neg__(self):
        return DoubleForm(self.n, self.p, self.q, -self.mat, self.field)

    def __mul__(self, scalar):
        if isinstance(scalar, DoubleForm):
            return NotImplemented
        if self.field == scalars.FLOAT64:
            scalar = float(scalar)
        return DoubleForm(self.n, self.p, self.q, self.mat * scalar, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DoubleForm):
            return NotImplemented
        return (self.n == other.n and self.bidegree == other.bidegree
                and bool(np.all(self.mat == other.mat)))

    __hash__ = None  # unhashable: payload is a mutable array


def one(n, field=scalars.RATIONAL):
    """The unit (0, 0) double form."""
    out = DoubleForm.zeros(n, 0, 0, field)
    out.mat[0, 0] = scalars.coerce(1, field)
    return out


def metric(n, field=scalars.RATIONAL):
    """The inner product g as a (1, 1) double form: the identity matrix."""
    return metric_power(n, 1, field)


def metric_power(n, k, field=scalars.RATIONAL):
    """The k-th exterior power g^k: k! times the identity on Lambda^k."""
    if not 0 <= k <= n:
        raise ValueError(f"metric power {k} out of range [0, {n}]")
    out = DoubleForm.zeros(n, k, k, field)
    fact = scalars.coerce(factorial(k), field)
    for r in range(comb(n, k)):
        out.mat[r, r] = fact
    return out


# ---------------------------------------------------------------------------
# products, contractions, star


def wedge(w1: DoubleForm, w2: DoubleForm) -> DoubleForm:
    """Exterior product of double forms (slot-wise wedge, shuffle signs)."""
    w1._check_compatible(w2)
    n = w1.n
    P, Q = w1.p + w2.p, w1.q + w2.q
    out = DoubleForm.zeros(n, P, Q, w1.field)
    if P > n or Q > n:
        return out
    nnz1 = sum(1 for v in w1.mat.flat if v != 0)
    nnz2 = sum(1 for v in w2.mat.flat if v != 0)
    gather_cost = comb(n, P) * comb(n, Q) * comb(P, w1.p) * comb(Q, w1.q)
    if nnz1 * nnz2 <= gather_cost:
        _wedge_scatter(w1, w2, out)
    else:
        _wedge_gather(w1, w2, out)
    return out


def _wedge_scatter(w1, w2, out):
    n = w1.n
    rows = merge_table(n, w1.p, w2.p)
    cols = merge_table(n, w1.q, w2.q)
    m1, m2, mo = w1.mat, w2.mat, out.mat
    for (i1, j1), v1 in np.ndenumerate(m1):
        if v1 == 0:
            continue
        rrow = rows[i1]
        rcol = cols[j1]
        for (i2, j2), v2 in np.ndenumerate(m2):
            if v2 == 0:
                continue
            mr = rrow[i2]
            if mr is None:
                continue
            mc = rcol[j2]
            if mc is None:
                continue
            sr, ri = mr
            sc, rj = mc
            mo[ri, rj] += (v1 * v2) if sr == sc else -(v1 * v2)


def _wedge_gather(w1, w2, out):
    n = w1.n
    P, Q = out.p, out.q
    rows = split_table(n, P, w1.p)
    cols = split_table(n, Q, w1.q)
    m1, m2, mo = w1.mat, w2.mat, out.mat
    for ri in range(mo.shape[0]):
        row_splits = rows[ri]
        for rj in range(mo.shape[1]):
            acc = mo[ri, rj]
            for (ra, rb, sr) in row_splits:
                r1 = m1[ra]
                r2 = m2[rb]
                for (ca, cb, sc) in cols[rj]:
                    v = r1[ca]
                    if v == 0:
                        continue
                    u = r2[cb]
                    if u == 0:
                        continue
                    acc += (v * u) if sr == sc else -(v * u)
            mo[ri, rj] = acc


def wedge_power(w: DoubleForm, k: int) -> DoubleForm:
    """k-fold exterior power; k = 0 gives the unit (0, 0) form."""
    if k < 0:
        raise ValueError("negative exterior power")
    if k == 0:
        return one(w.n, w.field)
    out = w
    for _ in range(k - 1):
        out = wedge(out, w)
    return out


def contract(w: DoubleForm) -> DoubleForm:
    """Trace-like contraction mapping (p, q) to (p-1, q-1).

    Vanishes by convention when p = 0 or q = 0.
    """
    n = w.n
    if w.p == 0 or w.q == 0:
        return DoubleForm.zeros(n, max(w.p - 1, 0), max(w.q - 1, 0), w.field)
    out = DoubleForm.zeros(n, w.p - 1, w.q - 1, w.field)
    rows = insertion_table(n, w.p)
    cols = insertion_table(n, w.q)
    m, mo = w.mat, out.mat
    for ri in range(mo.shape[0]):
        rins = rows[ri]
        for rj in range(mo.shape[1]):
            acc = mo[ri, rj]
            cins = cols[rj]
            for a, (sr, ra) in rins.items():
                hit = cins.get(a)
                if hit is None:
                    continue
                sc, ca = hit
                v = m[ra, ca]
                if v == 0:
                    continue
                acc += v if sr == sc else -v
            mo[ri, rj] = acc
    return out


def contract_iter(w: DoubleForm, r: int) -> DoubleForm:
    for _ in range(r):
        w = contract(w)
    return w


def contract_with_metric(w: DoubleForm, G: DoubleForm) -> DoubleForm:
    """Contraction with respect to an arbitrary metric G in place of g.

    G is a symmetric invertible (1, 1) form (positive definite in the
    geometric setting); its inverse is computed by exact elimination in
    rational mode.  G = identity reduces to contract(w).
    """
    n = w.n
    if G.bidegree != (1, 1) or G.n != n:
        raise ValueError("metric must be a (1, 1) form on the same space")
    Ginv = _invert_metric(G)
    if w.p == 0 or w.q == 0:
        return DoubleForm.zeros(n, max(w.p - 1, 0), max(w.q - 1, 0), w.field)
    out = DoubleForm.zeros(n, w.p - 1, w.q - 1, w.field)
    rows = insertion_table(n, w.p)
    cols = insertion_table(n, w.q)
    m, mo = w.mat, out.mat
    for ri in range(mo.shape[0]):
        rins = rows[ri]
        for rj in range(mo.shape[1]):
            acc = mo[ri, rj]
            cins = cols[rj]
            for a, (sa, ra) in rins.items():
                for b, (sb, cb) in cins.items():
                    gi = Ginv[a, b]
                    if gi == 0:
                        continue
                    v = m[ra, cb]
                    if v == 0:
                        continue
                    acc += gi * v if sa == sb else -(gi * v)
            mo[ri, rj] = acc
    return out


def _invert_metric(G: DoubleForm):
    """Exact inverse of a symmetric invertible (1, 1) form.

    Gauss-Jordan elimination with partial pivoting; rational entries stay
    exact.  Raises on a non-symmetric or singular matrix.
    """
    n = G.n
    M = G.mat
    if not np.all(M == M.T):
        raise ValueError("metric must be symmetric")
    if G.field == scalars.FLOAT64:
        a = M.astype(float).copy()
        inv = np.eye(n)
    else:
        a = np.empty((n, n), dtype=object)
        for idx, v in np.ndenumerate(M):
            a[idx] = Fraction(v)
        inv = np.zeros((n, n), dtype=object)
        for i in range(n):
            inv[i, i] = Fraction(1)
    for col in range(n):
        piv_row = max(range(col, n), key=lambda r: abs(a[r, col]))
        if a[piv_row, col] == 0:
            raise ValueError("metric is singular")
        if piv_row != col:
            a[[col, piv_row]] = a[[piv_row, col]]
            inv[[col, piv_row]] = inv[[piv_row, col]]
        piv = a[col, col]
        a[col] = a[col] / piv
        inv[col] = inv[col] / piv
        for r in range(n):
            if r != col and a[r, col] != 0:
                f = a[r, col]
                a[r] = a[r] - f * a[col]
                inv[r] = inv[r] - f * inv[col]
    return inv


def hodge(w: DoubleForm) -> DoubleForm:
    """Double Hodge star: applies the usual star to both argument slots."""
    n, p, q = w.n, w.p, w.q
    if p > n or q > n:
        # identically-zero spillover degree from a wedge past the top
        return DoubleForm.zeros(n, max(n - p, 0), max(n - q, 0), w.field)
    out = DoubleForm.zeros(n, n - p, n - q, w.field)
    sigma = -1 if ((p + q) * (n - p - q)) % 2 else 1
    rows = complement_table(n, n - p)
    cols = complement_table(n, n - q)
    m, mo = w.mat, out.mat
    for ri in range(mo.shape[0]):
        rc, er = rows[ri]
        se = sigma * er
        for rj in range(mo.shape[1]):
            cc, ec = cols[rj]
            v = m[rc, cc]
            if v != 0:
                mo[ri, rj] = (se * ec) * v
    return out


def transpose(w: DoubleForm) -> DoubleForm:
    return DoubleForm(w.n, w.q, w.p, w.mat.T.copy(), w.field)


def inner(w1: DoubleForm, w2: DoubleForm):
    """Euclidean inner product of two double forms of equal bidegree."""
    w1._check_compatible(w2)
    if w1.bidegree != w2.bidegree:
        raise ValueError(f"inner product needs equal bidegrees, "
                         f"got {w1.bidegree} and {w2.bidegree}")
    acc = 0
    for v1, v2 in zip(w1.mat.flat, w2.mat.flat):
        if v1 != 0 and v2 != 0:
            acc += v1 * v2
    return scalars.coerce(acc, w1.field)


def compose(w1: DoubleForm, w2: DoubleForm) -> DoubleForm:
    """Composition product: composition of the associated linear maps.

    For w1 in (p, q) and w2 in (r, s) the result lives in (r, q) and is zero
    unless p = s; on matrices it is M(w2) . M(w1).
    """
    w1._check_compatible(w2)
    if w1.p != w2.q:
        return DoubleForm.zeros(w1.n, w2.p, w1.q, w1.field)
    return DoubleForm(w1.n, w2.p, w1.q, w2.mat.dot(w1.mat), w1.field)


def compose_power(w: DoubleForm, r: int) -> DoubleForm:
    """r-th power in the composition algebra; r = 0 is the identity g^p/p!."""
    if w.p != w.q:
        raise ValueError(f"composition powers need square bidegree, got {w.bidegree}")
    if r < 0:
        raise ValueError("negative composition power")
    size = comb(w.n, w.p)
    if w.field == scalars.FLOAT64:
        acc = np.eye(size)
    else:
        acc = np.zeros((size, size), dtype=object)
        for i in range(size):
            acc[i, i] = 1
    for _ in range(r):
        acc = acc.dot(w.mat)
    return DoubleForm(w.n, w.p, w.q, acc, w.field)


def bianchi_residual(w: DoubleForm):
    """Largest absolute value of the first-Bianchi alternating sum.

    Zero exactly when w satisfies the first Bianchi identity.
    """
    n, p, q = w.n, w.p, w.q
    if p < 1 or q < 1:
        raise ValueError("Bianchi sum needs p >= 1 and q >= 1")
    worst = 0
    ranks_p = {s: r for r, s in enumerate(subsets(n, p))}
    for X in subsets(n, p + 1):
        for Y in subsets(n, q - 1):
            acc = 0
            for j, xj in enumerate(X):
                rest = X[:j] + X[j + 1:]
                merged = merge_sign_tuple((xj,), Y)
                if merged is None:
                    continue
                sign, col = merged
                v = w.mat[ranks_p[rest], rank_tuple(col, n)]
                term = sign * v
                acc += -term if j % 2 == 0 else term  # (-1)^j with 1-based j
            worst = max(worst, abs(acc))
    return worst

"""Lexicographic multi-index combinatorics.

Basis p-vectors e_{i1} ^ ... ^ e_{ip} are addressed by strictly ascending
tuples of integers in [0, n).  All dense matrices in this package index
their rows and columns by the lexicographic rank of such tuples, so the
rank/unrank maps and the sign tables below are the combinatorial kernel
everything else is built on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

MAX_DIM = 64


@dataclass(frozen=True)
class MultiIndex:
    """Strictly ascending tuple of basis indices in an n-dimensional space."""

    indices: tuple[int, ...]
    n: int

    def __post_init__(self):
        validate_indices(self.indices, self.n)

    @property
    def degree(self) -> int:
        return len(self.indices)

    def complement(self) -> "MultiIndex":
        return MultiIndex(complement_tuple(self.indices, self.n), self.n)


def validate_indices(indices, n):
    if not 0 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in [0, {MAX_DIM}], got {n}")
    for a, b in zip(indices, indices[1:]):
        if a >= b:
            raise ValueError(f"indices must be strictly ascending: {indices}")
    if indices and not (0 <= indices[0] and indices[-1] < n):
        raise ValueError(f"indices {indices} out of range [0, {n})")


@lru_cache(maxsize=None)
def subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {0,...,n-1} in lexicographic order."""
    if k < 0 or k > n:
        return ()
    return tuple(itertools.combinations(range(n), k))


@lru_cache(maxsize=None)
def _rank_of(n: int, k: int) -> dict:
    return {s: r for r, s in enumerate(subsets(n, k))}


def rank_tuple(indices: tuple[int, ...], n: int) -> int:
    try:
        return _rank_of(n, len(indices))[tuple(indices)]
    except KeyError:
        raise ValueError(f"{indices} is not an ascending subset of [0, {n})") from None


def unrank_tuple(r: int, k: int, n: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        raise ValueError(f"degree {k} out of range for dimension {n}")
    if not 0 <= r < comb(n, k):
        raise ValueError(f"rank {r} out of range [0, C({n},{k}))")
    return subsets(n, k)[r]


def rank(index: MultiIndex) -> int:
    return rank_tuple(index.indices, index.n)


def unrank(r: int, k: int, n: int) -> MultiIndex:
    return MultiIndex(unrank_tuple(r, k, n), n)


def merge_sign_tuple(a: tuple[int, ...], b: tuple[int, ...]):
    """Sign of sorting the concatenation a||b, with the merged tuple.

    Returns None when a and b share an index (the wedge vanishes).
    """
    i, j, inv = 0, 0, 0
    out = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the len(a)-i remaining elements of a
            inv += len(a) - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if inv % 2 else 1), tuple(out)


def merge_sign(a: MultiIndex, b: MultiIndex):
    """merge_sign on MultiIndex values; None marks a vanishing wedge."""
    if a.n != b.n:
        raise ValueError("mismatched ambient dimensions")
    res = merge_sign_tuple(a.indices, b.indices)
    if res is None:
        return None
    sign, merged = res
    return sign, MultiIndex(merged, a.n)


def complement_tuple(indices: tuple[int, ...], n: int) -> tuple[int, ...]:
    inside = set(indices)
    return tuple(i for i in range(n) if i not in inside)


def complement_sign_tuple(indices: tuple[int, ...], n: int) -> int:
    # parity of the permutation (I, I^c) of (0,...,n-1); the number of
    # complement elements below indices[pos] is indices[pos] - pos
    inv = sum(a - pos for pos, a in enumerate(indices))
    return -1 if inv % 2 else 1


def complement_sign(index: MultiIndex) -> int:
    return complement_sign_tuple(index.indices, index.n)


# ---------------------------------------------------------------------------
# cached sign tables used by the dense exterior/double-form kernels


@lru_cache(maxsize=None)
def merge_table(n: int, p: int, q: int):
    """[rank_I][rank_J] -> (sign, rank of I|J), or None when I and J meet."""
    qsubs = subsets(n, q)
    ranks = _rank_of(n, p + q)
    table = []
    for I in subsets(n, p):
        row = []
        for J in qsubs:
            res = merge_sign_tuple(I, J)
            row.append(None if res is None else (res[0], ranks[res[1]]))
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def split_table(n: int, k: int, p: int):
    """For each k-subset K: all (rank_I, rank_J, sign) with I|J = K, |I| = p."""
    rank_p = _rank_of(n, p)
    rank_q = _rank_of(n, k - p)
    table = []
    for K in subsets(n, k):
        entries = []
        for pos in itertools.combinations(range(k), p):
            I = tuple(K[s] for s in pos)
            J = tuple(K[s] for s in range(k) if s not in pos)
            inv = sum(s - idx for idx, s in enumerate(pos))
            sign = -1 if inv % 2 else 1
            entries.append((rank_p[I], rank_q[J], sign))
        table.append(tuple(entries))
    return tuple(table)


@lru_cache(maxsize=None)
def insertion_table(n: int, p: int):
    """For each (p-1)-subset I: dict a -> (sign, rank of {a}|I) over a not in I."""
    ranks = _rank_of(n, p)
    table = []
    for I in subsets(n, p - 1):
        inside = set(I)
        row = {}
        for a in range(n):
            if a in inside:
                continue
            res = merge_sign_tuple((a,), I)
            row[a] = (res[0], ranks[res[1]])
        table.append(row)
    return tuple(table)


@lru_cache(maxsize=None)
def complement_table(n: int, k: int):
    """For each k-subset I: (rank of I^c, complement sign of I)."""
    ranks = _rank_of(n, n - k)
    return tuple(
        (ranks[complement_tuple(I, n)], complement_sign_tuple(I, n))
        for I in subsets(n, k)
    )

"""JSON tensor files.

One document per tensor:

    {"n": 4, "kind": "double_form", "p": 1, "q": 1, "scalar": "rational",
     "entries": [{"row": [0], "col": [1], "value": "-3/2"}, ...]}

Multi-indices are ascending and 0-based; omitted entries are zero;
rational values are "a" or "a/b" strings so files round-trip losslessly.
kind "form" uses {"row": [...], "value"} entries with a degree field "k";
kind "multiform" adds a slot count "r" and uses {"slots": [[...], ...]}.
"""

from __future__ import annotations

import json

import numpy as np

from . import scalars
from .dform import DoubleForm
from .exterior import ExteriorForm, MultiForm
from .multiindex import rank_tuple, unrank_tuple


class TensorFormatError(ValueError):
    """Malformed tensor document."""


def tensor_to_doc(obj) -> dict:
    if isinstance(obj, DoubleForm):
        entries = []
        for (i, j), v in np.ndenumerate(obj.mat):
            if v != 0:
                entries.append({"row": list(unrank_tuple(i, obj.p, obj.n)),
                                "col": list(unrank_tuple(j, obj.q, obj.n)),
                                "value": scalars.format_scalar(v, obj.field)})
        return {"n": obj.n, "kind": "double_form", "p": obj.p, "q": obj.q,
                "scalar": obj.field, "entries": entries}
    if isinstance(obj, ExteriorForm):
        entries = []
        for i, v in enumerate(obj.coeffs):
            if v != 0:
                entries.append({"row": list(unrank_tuple(i, obj.k, obj.n)),
                                "value": scalars.format_scalar(v, obj.field)})
        return {"n": obj.n, "kind": "form", "k": obj.k,
                "scalar": obj.field, "entries": entries}
    if isinstance(obj, MultiForm):
        entries = []
        for idx, v in np.ndenumerate(obj.coeffs):
            if v != 0:
                entries.append({"slots": [list(unrank_tuple(i, obj.k, obj.n))
                                          for i in idx],
                                "value": scalars.format_scalar(v, obj.field)})
        return {"n": obj.n, "kind": "multiform", "k": obj.k, "r": obj.r,
                "scalar": obj.field, "entries": entries}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def tensor_to_json(obj, indent=None) -> str:
    return json.dumps(tensor_to_doc(obj), indent=indent)


def _need(doc, key, types):
    if key not in doc:
        raise TensorFormatError(f"missing field {key!r}")
    v = doc[key]
    if not isinstance(v, types):
        raise TensorFormatError(f"field {key!r} has the wrong type")
    return v


def _index_tuple(raw, n, what):
    if not isinstance(raw, list) or not all(isinstance(i, int) for i in raw):
        raise TensorFormatError(f"{what} must be a list of integers")
    t = tuple(raw)
    if any(a >= b for a, b in zip(t, t[1:])) or (t and (t[0] < 0 or t[-1] >= n)):
        raise TensorFormatError(f"{what} {raw} is not ascending in [0, {n})")
    return t


def _value(raw, field):
    try:
        if field == scalars.RATIONAL and not isinstance(raw, str):
            if isinstance(raw, int):
                return raw
            raise TensorFormatError("rational values must be strings")
        return scalars.parse_scalar(raw, field)
    except (ValueError, ZeroDivisionError) as exc:
        raise TensorFormatError(f"bad value {raw!r}: {exc}") from None


def tensor_from_doc(doc):
    if not isinstance(doc, dict):
        raise TensorFormatError("tensor document must be a JSON object")
    n = _need(doc, "n", int)
    kind = _need(doc, "kind", str)
    field = doc.get("scalar", scalars.RATIONAL)
    if field not in scalars.FIELDS:
        raise TensorFormatError(f"unknown scalar field {field!r}")
    entries = _need(doc, "entries", list)
    try:
        if kind == "double_form":
            p = _need(doc, "p", int)
            q = _need(doc, "q", int)
            out = DoubleForm.zeros(n, p, q, field)
            seen = set()
            for e in entries:
                row = _index_tuple(_need(e, "row", list), n, "row index")
                col = _index_tuple(_need(e, "col", list), n, "col index")
                if len(row) != p or len(col) != q:
                    raise TensorFormatError(
                        f"entry ({row}, {col}) does not match bidegree ({p}, {q})")
                if (row, col) in seen:
                    raise TensorFormatError(f"duplicate entry ({row}, {col})")
                seen.add((row, col))
                if "value" not in e:
                    raise TensorFormatError("entry missing 'value'")
                out.mat[rank_tuple(row, n), rank_tuple(col, n)] = \
                    _value(e["value"], field)
            return out
        if kind == "form":
            k = _need(doc, "k", int)
            out = ExteriorForm.zeros(n, k, field)
            seen = set()
            for e in entries:
                row = _index_tuple(_need(e, "row", list), n, "index")
                if len(row) != k:
                    raise TensorFormatError(f"entry {row} does not match degree {k}")
                if row in seen:
                    raise TensorFormatError(f"duplicate entry {row}")
                seen.add(row)
                if "value" not in e:
                    raise TensorFormatError("entry missing 'value'")
                out.coeffs[rank_tuple(row, n)] = _value(e["value"], field)
            return out
        if kind == "multiform":
            k = _need(doc, "k", int)
            r = _need(doc, "r", int)
            out = MultiForm.zeros(n, k, r, field)
            seen = set()
            for e in entries:
                raw = _need(e, "slots", list)
                if len(raw) != r:
                    raise TensorFormatError(f"entry needs {r} slots")
                slots = tuple(_index_tuple(s, n, "slot index") for s in raw)
                if any(len(s) != k for s in slots):
                    raise TensorFormatError(f"entry {raw} does not match slot degree {k}")
                if slots in seen:
                    raise TensorFormatError(f"duplicate entry {raw}")
                seen.add(slots)
                if "value" not in e:
                    raise TensorFormatError("entry missing 'value'")
                out.coeffs[tuple(rank_tuple(s, n) for s in slots)] = \
                    _value(e["value"], field)
            return out
    except ValueError as exc:
        if isinstance(exc, TensorFormatError):
            raise
        raise TensorFormatError(str(exc)) from None
    raise TensorFormatError(f"unknown tensor kind {kind!r}")


def tensor_from_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFormatError(f"invalid JSON: {exc}") from None
    return tensor_from_doc(doc)


def load_tensor(path):
    with open(path, "r", encoding="utf-8") as fh:
        return tensor_from_json(fh.read())

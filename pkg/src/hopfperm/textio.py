"""Text and JSON serialization.

Plain text::

    F[4123] - F[4132] - F[4213] + F[4321]
    M(1,1,2) + 2*M(1,3)
    F[1] ⊗ F[231]

JSON follows ``{"basis": "M", "dual": false, "terms": [{"index": [4,1,2,3], "coeff": 1}]}``
with an added ``"algebra"`` tag.  Quasi-symmetric indices are stored as the
sorted subset plus its ``"ambient"`` degree.
"""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Any

from .config import InvalidInput
from .linear import PermExpansion, QSymExpansion, TensorExpansion, _Linear
from .perm_core import Composition, Permutation, Subset, format_permutation, parse_permutation

__all__ = [
    "format_expansion",
    "parse_expansion",
    "format_subset",
    "parse_subset",
    "format_composition",
    "parse_composition",
    "to_json",
    "from_json",
    "dumps",
    "loads",
    "table_to_csv",
]


def format_subset(S: Subset) -> str:
    return "{" + ",".join(str(i) for i in S.members) + "}"


def parse_subset(text: str, n: int) -> Subset:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise InvalidInput(f"subsets are written like {{2,3}}, got {text!r}")
    body = s[1:-1].strip()
    try:
        members = [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise InvalidInput(f"cannot parse subset {text!r}") from exc
    return Subset(members, n)


def format_composition(alpha: Composition) -> str:
    return "(" + ",".join(str(x) for x in alpha) + ")"


def parse_composition(text: str) -> Composition:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise InvalidInput(f"compositions are written like (2,1,1), got {text!r}")
    body = s[1:-1].strip()
    try:
        return Composition(int(x) for x in body.split(",")) if body else Composition(())
    except ValueError as exc:
        raise InvalidInput(f"cannot parse composition {text!r}") from exc


def _index_text(x: _Linear, key) -> str:
    star = "*" if x.dual else ""
    if isinstance(x, PermExpansion):
        return f"{x.basis}{star}[{format_permutation(key)}]"
    if isinstance(x, QSymExpansion):
        return f"{x.basis}{star}{format_composition(key)}"
    sub = PermExpansion if x.algebra == "ssym" else QSymExpansion
    proto = sub(x.basis, dual=x.dual)
    return " ⊗ ".join(_index_text(proto, k) for k in key)


def format_expansion(x: _Linear) -> str:
    items = x.items()
    if not items:
        return "0"
    chunks = []
    for i, (key, c) in enumerate(items):
        name = _index_text(x, key)
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append((" - " if c < 0 else " + ") + body)
    return "".join(chunks)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?([FM])(\*?)(\[[^\]]*\]|\([^)]*\))\s*")


def parse_expansion(text: str) -> PermExpansion | QSymExpansion:
    """Inverse of :func:`format_expansion` for permutation and composition expansions."""
    s = text.strip()
    if s == "0":
        raise InvalidInput("the zero expansion carries no basis; use JSON for it")
    pos = 0
    terms = []
    basis = dual = kind = None
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise InvalidInput(f"cannot parse expansion near {s[pos:]!r}")
        sign, mag, b, star, idx = m.groups()
        c = int(mag) if mag else 1
        if sign == "-":
            c = -c
        k = "perm" if idx.startswith("[") else "qsym"
        if basis is None:
            basis, dual, kind = b, bool(star), k
        elif (b, bool(star), k) != (basis, dual, kind):
            raise InvalidInput("mixed bases in one expansion")
        key = Permutation(idx[1:-1]) if k == "perm" else parse_composition(idx)
        terms.append((key, c))
        pos = m.end()
    cls = PermExpansion if kind == "perm" else QSymExpansion
    return cls(basis, terms, dual=dual)


def _index_json(algebra: str, key) -> dict:
    if algebra == "ssym":
        return {"index": list(key)}
    S = key.subset()
    return {"index": list(S.members), "ambient": S.n}


def _index_from_json(algebra: str, item: dict):
    if algebra == "ssym":
        return Permutation(item["index"])
    return Subset(item["index"], item["ambient"]).composition()


def to_json(x: _Linear) -> dict[str, Any]:
    if isinstance(x, TensorExpansion):
        algebra = x.algebra
        terms = []
        for key, c in x.items():
            parts = [_index_json(algebra, k) for k in key]
            entry: dict[str, Any] = {"index": [p["index"] for p in parts]}
            if algebra == "qsym":
                entry["ambient"] = [p["ambient"] for p in parts]
            entry["coeff"] = c
            terms.append(entry)
        return {
            "algebra": algebra,
            "basis": x.basis,
            "dual": x.dual,
            "arity": x.arity,
            "terms": terms,
        }
    algebra = "ssym" if isinstance(x, PermExpansion) else "qsym"
    terms = [{**_index_json(algebra, k), "coeff": c} for k, c in x.items()]
    return {"algebra": algebra, "basis": x.basis, "dual": x.dual, "terms": terms}


def from_json(data: dict[str, Any]) -> _Linear:
    try:
        algebra = data.get("algebra", "ssym")
        basis = data["basis"]
        dual = bool(data.get("dual", False))
        if "arity" in data:
            arity = int(data["arity"])
            terms = []
            for t in data["terms"]:
                if algebra == "ssym":
                    key = tuple(Permutation(i) for i in t["index"])
                else:
                    key = tuple(
                        Subset(i, a).composition() for i, a in zip(t["index"], t["ambient"])
                    )
                terms.append((key, t["coeff"]))
            return TensorExpansion(basis, arity, terms, dual=dual, algebra=algebra)
        terms = [(_index_from_json(algebra, t), t["coeff"]) for t in data["terms"]]
        cls = PermExpansion if algebra == "ssym" else QSymExpansion
        return cls(basis, terms, dual=dual)
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed expansion JSON: {exc}") from exc


def dumps(x: _Linear) -> str:
    return json.dumps(to_json(x), separators=(",", ":"))


def loads(text: str) -> _Linear:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from exc
    return from_json(data)


def table_to_csv(labels: list[str], matrix) -> str:
    """CSV with a header row of column labels; each row starts with its own label."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [int(v) for v in row])
    return buf.getvalue()


def parse_index(text: str, algebra: str):
    """Read one basis index: a permutation, a composition or ``{S}@n``."""
    s = text.strip()
    if algebra == "ssym":
        return Permutation(parse_permutation(s))
    if s.startswith("("):
        return parse_composition(s)
    if s.startswith("{"):
        body, _, n = s.partition("@")
        if not n:
            raise InvalidInput("a subset index needs its ambient degree, e.g. {2}@4")
        return parse_subset(body, int(n)).composition()
    raise InvalidInput(f"cannot parse index {text!r}")

"""The JSON document format shared by the command-line tools.

A document stores one algebra (dimension, basis labels, sparse product
table) and optional named blocks:

* ``delta``    - a comultiplication, written like a product table on the
  dual basis: ``delta["a,b"]["c"]`` is the coefficient of ``a (x) b`` in
  the image of basis element ``c``;
* ``tensors``  - named rank-2 tensors, ``{"name": {"a,b": "p/q"}}``;
* ``maps``     - named square matrices, ``{"name": {"out,in": "p/q"}}``;
* ``forms``    - named gram matrices, same cell syntax as tensors.

Rationals are strings ``"p"`` or ``"p/q"`` with positive q; omitted cells
are zero.  Serialization sorts keys and omits zero entries, so output is
byte-deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .algebra import Algebra
from .bialgebra import Comultiplication
from .core import ZERO, Matrix, Tensor2, Vector
from .double import BilinearForm
from .errors import FileFormatError

SCHEMA_VERSION = "a3kit/1"

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: Any, where: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FileFormatError(f"{where}: expected a rational string 'p' or 'p/q', got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise FileFormatError(f"{where}: zero denominator in {text!r}") from None


def rational_str(value: Fraction) -> str:
    return str(value)


@dataclass
class Document:
    algebra: Algebra
    delta: Optional[Comultiplication] = None
    tensors: dict[str, Tensor2] = field(default_factory=dict)
    maps: dict[str, Matrix] = field(default_factory=dict)
    forms: dict[str, BilinearForm] = field(default_factory=dict)


def _label_index(labels: tuple[str, ...], label: Any, where: str) -> int:
    try:
        return labels.index(label)
    except ValueError:
        raise FileFormatError(f"{where}: unknown basis label {label!r}") from None


def _parse_pair_key(key: str, labels: tuple[str, ...], where: str) -> tuple[int, int]:
    parts = key.split(",")
    if len(parts) != 2:
        raise FileFormatError(f"{where}: key {key!r} must be 'label,label'")
    return (
        _label_index(labels, parts[0].strip(), f"{where}[{key!r}]"),
        _label_index(labels, parts[1].strip(), f"{where}[{key!r}]"),
    )


def _parse_cells(block: Any, labels: tuple[str, ...], where: str) -> dict[tuple[int, int], Fraction]:
    if not isinstance(block, dict):
        raise FileFormatError(f"{where}: expected an object of cells")
    out: dict[tuple[int, int], Fraction] = {}
    for key, value in block.items():
        pos = _parse_pair_key(key, labels, where)
        out[pos] = parse_rational(value, f"{where}[{key!r}]")
    return out


def parse_document(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise FileFormatError("top level must be an object")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise FileFormatError(f"schema_version: expected {SCHEMA_VERSION!r}, got {version!r}")
    dim = raw.get("dim")
    basis = raw.get("basis")
    if not isinstance(dim, int) or dim <= 0:
        raise FileFormatError("dim: expected a positive integer")
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(x, str) for x in basis):
        raise FileFormatError("basis: expected a list of dim labels")
    if len(set(basis)) != dim:
        raise FileFormatError("basis: labels must be distinct")
    labels = tuple(basis)

    sc = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    products = raw.get("products", {})
    if not isinstance(products, dict):
        raise FileFormatError("products: expected an object")
    for key, comps in products.items():
        i, j = _parse_pair_key(key, labels, "products")
        if not isinstance(comps, dict):
            raise FileFormatError(f"products[{key!r}]: expected an object of components")
        for lbl, value in comps.items():
            k = _label_index(labels, lbl, f"products[{key!r}]")
            sc[i][j][k] = parse_rational(value, f"products[{key!r}][{lbl!r}]")
    algebra = Algebra.of(sc, labels)

    delta = None
    if "delta" in raw:
        dd = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        if not isinstance(raw["delta"], dict):
            raise FileFormatError("delta: expected an object")
        for key, comps in raw["delta"].items():
            a, b = _parse_pair_key(key, labels, "delta")
            if not isinstance(comps, dict):
                raise FileFormatError(f"delta[{key!r}]: expected an object of components")
            for lbl, value in comps.items():
                c = _label_index(labels, lbl, f"delta[{key!r}]")
                dd[c][a][b] = parse_rational(value, f"delta[{key!r}][{lbl!r}]")
        delta = Comultiplication.of(dd)

    tensors: dict[str, Tensor2] = {}
    for name, block in (raw.get("tensors") or {}).items():
        cells = _parse_cells(block, labels, f"tensors[{name!r}]")
        coeff = [[ZERO] * dim for _ in range(dim)]
        for (a, b), v in cells.items():
            coeff[a][b] = v
        tensors[name] = Tensor2.of(coeff)

    maps: dict[str, Matrix] = {}
    for name, block in (raw.get("maps") or {}).items():
        cells = _parse_cells(block, labels, f"maps[{name!r}]")
        entries = [[ZERO] * dim for _ in range(dim)]
        for (out_i, in_j), v in cells.items():
            entries[out_i][in_j] = v
        maps[name] = Matrix.of(entries)

    forms: dict[str, BilinearForm] = {}
    for name, block in (raw.get("forms") or {}).items():
        cells = _parse_cells(block, labels, f"forms[{name!r}]")
        entries = [[ZERO] * dim for _ in range(dim)]
        for (a, b), v in cells.items():
            entries[a][b] = v
        forms[name] = BilinearForm.of(entries)

    return Document(algebra, delta, tensors, maps, forms)


def load_document(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _cells_of_matrix(entries, labels) -> dict[str, str]:
    out = {}
    for a, row in enumerate(entries):
        for b, value in enumerate(row):
            if value != 0:
                out[f"{labels[a]},{labels[b]}"] = rational_str(value)
    return out


def render_algebra(algebra: Algebra) -> dict[str, Any]:
    products: dict[str, dict[str, str]] = {}
    labels = algebra.basis_labels
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            comps = {
                labels[k]: rational_str(algebra.sc[i][j][k])
                for k in range(n)
                if algebra.sc[i][j][k] != 0
            }
            if comps:
                products[f"{labels[i]},{labels[j]}"] = comps
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": n,
        "basis": list(labels),
        "products": products,
    }


def render_delta(delta: Comultiplication, labels: tuple[str, ...]) -> dict[str, dict[str, str]]:
    out: dict[str, dict[str, str]] = {}
    n = delta.dim
    for c in range(n):
        for a in range(n):
            for b in range(n):
                v = delta.dd[c][a][b]
                if v != 0:
                    out.setdefault(f"{labels[a]},{labels[b]}", {})[labels[c]] = rational_str(v)
    return out


def render_tensor(tensor: Tensor2, labels: tuple[str, ...]) -> dict[str, str]:
    return _cells_of_matrix(tensor.coeff, labels)


def render_matrix(matrix: Matrix, labels: tuple[str, ...]) -> dict[str, str]:
    return _cells_of_matrix(matrix.entries, labels)


def render_form(form: BilinearForm, labels: tuple[str, ...]) -> dict[str, str]:
    return _cells_of_matrix(form.gram.entries, labels)


def render_vector(vector: Vector, labels: tuple[str, ...]) -> str:
    terms = []
    for c, lbl in zip(vector.coords, labels):
        if c != 0:
            terms.append(f"{rational_str(c)}*{lbl}")
    return " + ".join(terms) if terms else "0"


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"

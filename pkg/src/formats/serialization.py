"""
JSON interchange files.

Every file is an object with ``format_version`` and ``kind``:

    filtered_complex  ring, complex {ranks, differentials}, filtration
                      {breakpoints, tail_high, allow_unsaturated, steps}, optional dga
    chain_complex     ring, ranks, differentials
    cw_complex        name, cells, boundary (integer matrices)
    page_report       ring, r, label, method, convention, terms

Matrices are lists of rows; filtration steps are lists of columns. Integers
are written as JSON numbers, rationals as ``"a/b"`` strings. Degree keys are
strings since JSON objects only have string keys.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from ..ahss import CWComplex
from ..complexes import ChainComplex
from ..exceptions import InvalidFiltrationError, SchemaError, ShapeError
from ..filtered import FilteredComplex, TAILS, ZERO_TAIL
from ..indexing import INTERNAL, Convention
from ..linalg import ExactMatrix, Ring
from ..multiplicative import FilteredDGA
from ..pages import Page

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
KINDS = ("filtered_complex", "chain_complex", "cw_complex", "page_report")


# -- scalars, rings and matrices ---------------------------------------------

def encode_scalar(value) -> Union[int, str]:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return int(value)


def encode_matrix(matrix: ExactMatrix) -> List[List]:
    return [[encode_scalar(x) for x in row] for row in matrix.to_rows()]


def encode_columns(matrix: ExactMatrix) -> List[List]:
    return [[encode_scalar(x) for x in col] for col in matrix.columns()]


def encode_ring(ring: Ring) -> Dict[str, Any]:
    data = {"kind": ring.kind}
    if ring.characteristic:
        data["characteristic"] = ring.characteristic
    return data


def decode_ring(data: Any, path: str = "$.ring") -> Ring:
    if isinstance(data, str):
        try:
            return Ring.parse(data)
        except ValueError as e:
            raise SchemaError(str(e), path) from None
    obj = _object(data, path)
    try:
        return Ring(_field(obj, "kind", path, str), int(obj.get("characteristic", 0)))
    except (TypeError, ValueError) as e:
        raise SchemaError(str(e), path) from None


def _scalar(ring: Ring, value: Any, path: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"expected an integer or an 'a/b' string, got {value!r}", path)
    try:
        return ring.normalize(value)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(str(e), path) from None


def decode_matrix(ring: Ring, data: Any, shape: Tuple[int, int], path: str) -> ExactMatrix:
    rows = _array(data, path)
    if len(rows) != shape[0]:
        raise SchemaError(f"expected {shape[0]} rows, got {len(rows)}", path)
    parsed = []
    for i, row in enumerate(rows):
        entries = _array(row, f"{path}[{i}]")
        if len(entries) != shape[1]:
            raise SchemaError(f"expected {shape[1]} entries, got {len(entries)}", f"{path}[{i}]")
        parsed.append([_scalar(ring, x, f"{path}[{i}][{j}]") for j, x in enumerate(entries)])
    return ExactMatrix(ring, parsed, shape)


def decode_columns(ring: Ring, data: Any, rows: int, path: str) -> ExactMatrix:
    columns = _array(data, path)
    parsed = []
    for j, col in enumerate(columns):
        entries = _array(col, f"{path}[{j}]")
        if len(entries) != rows:
            raise SchemaError(f"column has {len(entries)} entries, ambient rank is {rows}", f"{path}[{j}]")
        parsed.append([_scalar(ring, x, f"{path}[{j}][{i}]") for i, x in enumerate(entries)])
    return ExactMatrix.from_columns(ring, rows, parsed)


# -- schema helpers ----------------------------------------------------------

def _object(data: Any, path: str) -> dict:
    if not isinstance(data, dict):
        raise SchemaError(f"expected an object, got {type(data).__name__}", path)
    return data


def _array(data: Any, path: str) -> list:
    if not isinstance(data, list):
        raise SchemaError(f"expected an array, got {type(data).__name__}", path)
    return data


def _field(obj: dict, key: str, path: str, kind=None, default=...):
    if key not in obj:
        if default is ...:
            raise SchemaError(f"missing field {key!r}", path)
        return default
    value = obj[key]
    if kind is not None and (not isinstance(value, kind) or (kind is int and isinstance(value, bool))):
        raise SchemaError(f"field {key!r} must be {kind.__name__}", f"{path}.{key}")
    return value


def _degree(key: Any, path: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise SchemaError(f"degree key {key!r} is not an integer", path) from None


def _header(obj: dict, kind: str):
    version = _field(obj, "format_version", "$", int)
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {version}, expected {FORMAT_VERSION}", "$.format_version")
    found = _field(obj, "kind", "$", str)
    if found != kind:
        raise SchemaError(f"expected kind {kind!r}, got {found!r}", "$.kind")


def loads(text: str) -> dict:
    """Decode JSON text, reporting syntax errors with their line.

    Raises:
        SchemaError: If the text is not a JSON object
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return _object(data, "$")


def file_kind(data: dict) -> str:
    kind = _field(data, "kind", "$", str)
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}, expected one of {KINDS}", "$.kind")
    return kind


# -- chain complexes ---------------------------------------------------------

def encode_complex(C: ChainComplex) -> Dict[str, Any]:
    return {
        "ranks": {str(n): r for n, r in sorted(C.ranks.items())},
        "differentials": {str(n): encode_matrix(d) for n, d in sorted(C.differentials.items()) if not d.is_zero()},
    }


def decode_complex(ring: Ring, data: Any, path: str) -> ChainComplex:
    obj = _object(data, path)
    ranks = {}
    for key, rank in _object(_field(obj, "ranks", path, default={}), f"{path}.ranks").items():
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 0:
            raise SchemaError(f"rank must be a non-negative integer, got {rank!r}", f"{path}.ranks.{key}")
        ranks[_degree(key, f"{path}.ranks")] = rank
    differentials = {}
    for key, rows in _object(_field(obj, "differentials", path, default={}), f"{path}.differentials").items():
        n = _degree(key, f"{path}.differentials")
        shape = (ranks.get(n - 1, 0), ranks.get(n, 0))
        differentials[n] = decode_matrix(ring, rows, shape, f"{path}.differentials.{key}")
    return ChainComplex(ring, ranks, differentials)


def serialize_chain_complex(C: ChainComplex) -> Dict[str, Any]:
    return {"format_version": FORMAT_VERSION, "kind": "chain_complex", "ring": encode_ring(C.ring),
            **encode_complex(C)}


def parse_chain_complex(data: dict) -> ChainComplex:
    """Raises SchemaError on malformed input and InvalidComplexError if d∘d ≠ 0."""
    _header(data, "chain_complex")
    return decode_complex(decode_ring(_field(data, "ring", "$")), data, "$")


# -- filtered complexes ------------------------------------------------------

def serialize_filtered_complex(F: FilteredComplex, dga: Optional[FilteredDGA] = None) -> Dict[str, Any]:
    steps = []
    for b in F.breakpoints:
        for n in F.degrees():
            steps.append({"weight": b, "degree": n, "columns": encode_columns(F.step(b, n))})
    data = {
        "format_version": FORMAT_VERSION,
        "kind": "filtered_complex",
        "ring": encode_ring(F.ring),
        "complex": encode_complex(F.complex),
        "filtration": {
            "breakpoints": list(F.breakpoints),
            "tail_high": F.tail_high,
            "allow_unsaturated": F.allow_unsaturated,
            "steps": steps,
        },
    }
    if dga is not None:
        data["dga"] = {
            "products": [{"left": m, "right": n, "matrix": encode_matrix(mu)}
                         for (m, n), mu in sorted(dga.products.items())],
            "unit": [encode_scalar(x) for x in dga.unit.column(0)] if dga.unit is not None else None,
            "commutative": dga.commutative,
        }
    return data


def parse_filtered_complex(data: dict, validate: bool = True) -> Tuple[FilteredComplex, Optional[FilteredDGA]]:
    """Build a filtered complex (and its algebra, when present) from a decoded file.

    Raises:
        SchemaError: On malformed input, with the JSON path of the problem
        InvalidComplexError: If d∘d ≠ 0
        InvalidFiltrationError: If validation fails; carries the violation list
    """
    _header(data, "filtered_complex")
    ring = decode_ring(_field(data, "ring", "$"))
    C = decode_complex(ring, _field(data, "complex", "$", default={}), "$.complex")

    spec = _object(_field(data, "filtration", "$", default={}), "$.filtration")
    breakpoints = [_degree(b, "$.filtration.breakpoints")
                   for b in _array(_field(spec, "breakpoints", "$.filtration", default=[0]), "$.filtration.breakpoints")]
    tail = _field(spec, "tail_high", "$.filtration", str, ZERO_TAIL)
    if tail not in TAILS:
        raise SchemaError(f"tail_high must be one of {TAILS}", "$.filtration.tail_high")
    steps = {}
    for i, entry in enumerate(_array(_field(spec, "steps", "$.filtration", default=[]), "$.filtration.steps")):
        path = f"$.filtration.steps[{i}]"
        entry = _object(entry, path)
        b, n = _field(entry, "weight", path, int), _field(entry, "degree", path, int)
        if b not in breakpoints:
            raise SchemaError(f"weight {b} is not a breakpoint", f"{path}.weight")
        steps[(b, n)] = decode_columns(ring, _field(entry, "columns", path), C.rank(n), f"{path}.columns")
    try:
        F = FilteredComplex(C, breakpoints, steps, tail, bool(spec.get("allow_unsaturated", False)))
    except ShapeError as e:
        raise SchemaError(str(e), "$.filtration") from None

    dga = None
    if data.get("dga") is not None:
        dga = _parse_dga(F, _object(data["dga"], "$.dga"))

    if validate:
        violations = F.validate()
        if dga is not None:
            violations += dga.leibniz_violations() + dga.multiplicativity_violations()
        if violations:
            raise InvalidFiltrationError(f"{len(violations)} validation failures", violations)
    return F, dga


def _parse_dga(F: FilteredComplex, obj: dict) -> FilteredDGA:
    C = F.complex
    products = {}
    for i, entry in enumerate(_array(_field(obj, "products", "$.dga", default=[]), "$.dga.products")):
        path = f"$.dga.products[{i}]"
        entry = _object(entry, path)
        m, n = _field(entry, "left", path, int), _field(entry, "right", path, int)
        shape = (C.rank(m + n), C.rank(m) * C.rank(n))
        products[(m, n)] = decode_matrix(F.ring, _field(entry, "matrix", path), shape, f"{path}.matrix")
    unit = obj.get("unit")
    if unit is not None:
        unit = [_scalar(F.ring, x, f"$.dga.unit[{i}]") for i, x in enumerate(_array(unit, "$.dga.unit"))]
    try:
        return FilteredDGA(F, products, unit, bool(obj.get("commutative", False)))
    except ShapeError as e:
        raise SchemaError(str(e), "$.dga") from None


# -- CW complexes ------------------------------------------------------------

def serialize_cw_complex(X: CWComplex) -> Dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "cw_complex",
        "name": X.name,
        "cells": {str(k): c for k, c in sorted(X.cell_counts.items())},
        "boundary": {str(k): encode_matrix(X.boundary(k)) for k in sorted(X.cell_counts)
                     if k > 0 and not X.boundary(k).is_zero()},
    }


def parse_cw_complex(data: dict) -> CWComplex:
    _header(data, "cw_complex")
    ring = Ring.integers()
    cells = {}
    for key, count in _object(_field(data, "cells", "$"), "$.cells").items():
        if isinstance(count, bool) or not isinstance(count, int) or count < 0:
            raise SchemaError(f"cell count must be a non-negative integer, got {count!r}", f"$.cells.{key}")
        cells[_degree(key, "$.cells")] = count
    boundary = {}
    for key, rows in _object(_field(data, "boundary", "$", default={}), "$.boundary").items():
        k = _degree(key, "$.boundary")
        boundary[k] = decode_matrix(ring, rows, (cells.get(k - 1, 0), cells.get(k, 0)), f"$.boundary.{key}")
    try:
        return CWComplex(cells, boundary, _field(data, "name", "$", str, ""))
    except ShapeError as e:
        raise SchemaError(str(e), "$") from None


# -- page reports ------------------------------------------------------------

@dataclass(frozen=True)
class TermReport:
    """One term of a page in a convention's labels."""
    s: int
    t: int
    rank: int
    invariant_factors: Tuple[int, ...]
    differential: Tuple[Tuple, ...]
    target: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "t": self.t,
            "rank": self.rank,
            "invariant_factors": list(self.invariant_factors),
            "differential": [[encode_scalar(x) for x in row] for row in self.differential],
            "target": list(self.target),
        }


@dataclass(frozen=True)
class PageReport:
    """The nonzero terms of a page with their outgoing differentials."""
    ring: Ring
    r: Optional[int]
    label: str
    method: str
    convention: str
    terms: Tuple[TermReport, ...] = field(default_factory=tuple)

    @classmethod
    def from_page(cls, page: Page, convention: Convention = INTERNAL) -> "PageReport":
        terms = []
        for s, t in page.support():
            iso = page.term(s, t).iso
            target = convention.from_internal(*page.target(s, t))
            label = convention.from_internal(s, t)
            terms.append(TermReport(
                label[0], label[1], iso.free_rank, tuple(int(d) for d in iso.invariant_factors),
                tuple(tuple(row) for row in page.differential(s, t).to_rows()), target,
            ))
        terms.sort(key=lambda term: (term.s, term.t))
        r = None if page.infinite else convention.page_label(page.r)
        label = "E^inf" if page.infinite else f"E^{r}"
        return cls(page.ring, r, label, page.method, convention.name, tuple(terms))

    def term(self, s: int, t: int) -> Optional[TermReport]:
        return next((term for term in self.terms if (term.s, term.t) == (s, t)), None)

    def iso_classes(self) -> Dict[Tuple[int, int], Tuple[int, Tuple[int, ...]]]:
        """(s, t) → (rank, invariant factors), the data comparable across methods."""
        return {(term.s, term.t): (term.rank, term.invariant_factors) for term in self.terms}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format_version": FORMAT_VERSION,
            "kind": "page_report",
            "ring": encode_ring(self.ring),
            "r": self.r,
            "label": self.label,
            "method": self.method,
            "convention": self.convention,
            "terms": [term.to_dict() for term in self.terms],
        }


def parse_page_report(data: dict) -> PageReport:
    _header(data, "page_report")
    ring = decode_ring(_field(data, "ring", "$"))
    terms = []
    for i, entry in enumerate(_array(_field(data, "terms", "$", default=[]), "$.terms")):
        path = f"$.terms[{i}]"
        entry = _object(entry, path)
        target = _array(_field(entry, "target", path), f"{path}.target")
        if len(target) != 2:
            raise SchemaError("target must be a pair", f"{path}.target")
        rows = _array(_field(entry, "differential", path, default=[]), f"{path}.differential")
        width = len(rows[0]) if rows else 0
        differential = decode_matrix(ring, rows, (len(rows), width), f"{path}.differential")
        terms.append(TermReport(
            _field(entry, "s", path, int), _field(entry, "t", path, int), _field(entry, "rank", path, int),
            tuple(int(d) for d in _array(_field(entry, "invariant_factors", path, default=[]),
                                         f"{path}.invariant_factors")),
            tuple(tuple(row) for row in differential.to_rows()), (int(target[0]), int(target[1])),
        ))
    r = data.get("r")
    return PageReport(ring, int(r) if r is not None else None, _field(data, "label", "$", str),
                      _field(data, "method", "$", str), _field(data, "convention", "$", str), tuple(terms))


# -- files -------------------------------------------------------------------

def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def load_file(path: str) -> dict:
    """Read and decode an interchange file.

    Raises:
        SchemaError: If the file is not valid JSON
        OSError: If the file cannot be read
    """
    logger.debug(f"Reading {path}")
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())


def save_file(data: Dict[str, Any], path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(data))
    logger.info(f"Wrote {data.get('kind', 'file')} to {path}")

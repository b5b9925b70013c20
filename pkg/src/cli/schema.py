"""Model documents: JSON files describing a GKM presentation, a stratum poset or an extension problem.

Every document has ``kind`` and ``torus_dim``. Rationals are written as
``"num/den"`` strings (plain integers are accepted on input), vectors as
arrays, subalgebras as ``{"span": [...]}`` or ``{"kernel": [...]}`` and
polynomials in the canonical text form over u1..uN. Index sets of extension
constraints are 1-based. An optional ``claims`` list records expected
results and is echoed unchanged.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from exactpoly.errors import AssignmentError
from exactpoly.linear_form import LinearForm
from exactpoly.polynomial import Polynomial
from exactpoly.rational import ZERO, format_rational, format_vector, to_rational
from exactpoly.text import format_polynomial, parse_polynomial
from extendlib.problem import ExtensionProblem
from gkm_core.presentation import Component, GkmPresentation, Piece
from strata_oracle.space import Stratum, StratifiedSpace
from toruslin.subalgebra import Subalgebra

KINDS = ("gkm", "strata", "extension")

Body = Union[GkmPresentation, StratifiedSpace, ExtensionProblem]


class DocumentError(AssignmentError):
    """Malformed document: syntax error with position, or a violated schema rule with its path."""

    def __init__(
        self,
        message: str,
        invariant: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
        path: Optional[str] = None,
    ):
        super().__init__(message, invariant)
        self.line = line
        self.column = column
        self.path = path

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f"line {self.line}, column {self.column}: "
        elif self.path:
            where = f"{self.path}: "
        return where + super().__str__()


@dataclass(frozen=True)
class ModelDocument:
    kind: str
    torus_dim: int
    body: Body
    name: Optional[str] = None
    circle: Optional[Subalgebra] = None
    level: Fraction = ZERO
    moments: Optional[tuple[tuple[str, tuple[Fraction, ...]], ...]] = None
    claims: tuple[dict, ...] = field(default_factory=tuple)

    @property
    def degree_bound_default(self) -> int:
        if isinstance(self.body, GkmPresentation):
            return self.body.n
        if isinstance(self.body, StratifiedSpace):
            return len(self.body.strata)
        return max((c.target.degree for c in self.body.constraints if not c.target.is_zero()), default=0)


# ---- reading --------------------------------------------------------------


def _fail(path: str, message: str, invariant: str = "schema") -> DocumentError:
    return DocumentError(message, invariant, path=path)


def _expect(value: Any, kind: type, path: str) -> Any:
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise _fail(path, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _rational(value: Any, path: str) -> Fraction:
    try:
        return to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise _fail(path, f"not an exact rational: {value!r} ({exc})", "rational-syntax") from exc


def _vector(value: Any, length: int, path: str) -> tuple[Fraction, ...]:
    items = _expect(value, list, path)
    if len(items) != length:
        raise _fail(path, f"vector of length {len(items)}, expected {length}", "vector-length")
    return tuple(_rational(x, f"{path}[{i}]") for i, x in enumerate(items))


def _subalgebra(value: Any, dim: int, path: str) -> Subalgebra:
    block = _expect(value, dict, path)
    if set(block) == {"span"}:
        rows = _expect(block["span"], list, f"{path}.span")
        return Subalgebra.from_span(
            [_vector(r, dim, f"{path}.span[{i}]") for i, r in enumerate(rows)], dim
        )
    if set(block) == {"kernel"}:
        rows = _expect(block["kernel"], list, f"{path}.kernel")
        return Subalgebra.from_kernel(
            [_vector(r, dim, f"{path}.kernel[{i}]") for i, r in enumerate(rows)], dim
        )
    raise _fail(path, 'subalgebra needs exactly one of "span" or "kernel"', "subalgebra-block")


def _polynomial(value: Any, nvars: int, path: str) -> Polynomial:
    text = _expect(value, str, path)
    try:
        return parse_polynomial(text, nvars)
    except AssignmentError as exc:
        raise _fail(path, exc.message, exc.invariant or "polynomial-syntax") from exc


def _torus_dim(data: dict) -> int:
    dim = _expect(data.get("torus_dim"), int, "torus_dim")
    if dim < 1:
        raise _fail("torus_dim", "torus dimension must be positive", "torus-dim-positive")
    return dim


def _read_gkm(data: dict, dim: int) -> GkmPresentation:
    raw_components = _expect(data.get("components"), list, "components")
    components = []
    for i, raw in enumerate(raw_components):
        path = f"components[{i}]"
        entry = _expect(raw, dict, path)
        name = _expect(entry.get("name"), str, f"{path}.name")
        moment = _rational(entry["moment"], f"{path}.moment") if "moment" in entry else None
        vector = (
            _vector(entry["moment_vector"], dim, f"{path}.moment_vector")
            if "moment_vector" in entry
            else None
        )
        weights = None
        if "weights" in entry:
            rows = _expect(entry["weights"], list, f"{path}.weights")
            weights = tuple(
                LinearForm(_vector(w, dim, f"{path}.weights[{j}]")) for j, w in enumerate(rows)
            )
        components.append(Component(name, moment, vector, weights))

    names = {c.name: i for i, c in enumerate(components)}
    pieces = []
    for i, raw in enumerate(_expect(data.get("pieces", []), list, "pieces")):
        path = f"pieces[{i}]"
        entry = _expect(raw, dict, path)
        g = _subalgebra(entry.get("g"), dim, f"{path}.g")
        members = []
        for j, member in enumerate(_expect(entry.get("members"), list, f"{path}.members")):
            label = _expect(member, str, f"{path}.members[{j}]")
            if label not in names:
                raise _fail(f"{path}.members[{j}]", f"unknown component {label}", "piece-members-valid")
            members.append(names[label])
        pieces.append(Piece(g, tuple(members)))
    generalized = _expect(data.get("generalized", False), bool, "generalized")
    return GkmPresentation(dim, tuple(components), tuple(pieces), generalized)


def _read_strata(data: dict, dim: int) -> tuple[StratifiedSpace, Optional[tuple]]:
    strata = []
    moments = []
    for i, raw in enumerate(_expect(data.get("strata"), list, "strata")):
        path = f"strata[{i}]"
        entry = _expect(raw, dict, path)
        stratum_id = _expect(entry.get("id"), str, f"{path}.id")
        strata.append(Stratum(stratum_id, _subalgebra(entry.get("isotropy"), dim, f"{path}.isotropy")))
        if "moment_vector" in entry:
            moments.append((stratum_id, _vector(entry["moment_vector"], dim, f"{path}.moment_vector")))
    relations = []
    for i, raw in enumerate(_expect(data.get("order", []), list, "order")):
        pair = _expect(raw, list, f"order[{i}]")
        if len(pair) != 2 or not all(isinstance(x, str) for x in pair):
            raise _fail(f"order[{i}]", "order entries are [lower, upper] id pairs", "order-pair")
        relations.append((pair[0], pair[1]))
    space = StratifiedSpace.build(dim, strata, relations)
    return space, tuple(moments) if moments else None


def _read_extension(data: dict, dim: int) -> ExtensionProblem:
    forms = [
        LinearForm(_vector(f, dim, f"forms[{i}]"))
        for i, f in enumerate(_expect(data.get("forms"), list, "forms"))
    ]
    constraints = []
    for i, raw in enumerate(_expect(data.get("constraints", []), list, "constraints")):
        path = f"constraints[{i}]"
        entry = _expect(raw, dict, path)
        index_set = []
        for j, index in enumerate(_expect(entry.get("index_set"), list, f"{path}.index_set")):
            index_set.append(_expect(index, int, f"{path}.index_set[{j}]") - 1)
        constraints.append((index_set, _polynomial(entry.get("target"), dim, f"{path}.target")))
    return ExtensionProblem.build(dim, forms, constraints)


def parse_document(text: str) -> ModelDocument:
    """Parse and validate a document; every failure is a DocumentError."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, "json-syntax", line=exc.lineno, column=exc.colno) from exc
    data = _expect(data, dict, "$")
    kind = data.get("kind")
    if kind not in KINDS:
        raise _fail("kind", f"kind must be one of {', '.join(KINDS)}, got {kind!r}", "document-kind")
    name = data.get("name")
    if name is not None:
        _expect(name, str, "name")
    claims = tuple(_expect(c, dict, f"claims[{i}]") for i, c in enumerate(_expect(data.get("claims", []), list, "claims")))

    try:
        dim = _torus_dim(data)
        circle = None
        if "circle" in data:
            circle = _subalgebra({"span": [data["circle"]]}, dim, "circle")
            if circle.dim != 1:
                raise _fail("circle", "circle direction must be a nonzero vector", "circle-dim")
        level = _rational(data["level"], "level") if "level" in data else ZERO
        moments = None
        if kind == "gkm":
            body: Body = _read_gkm(data, dim)
        elif kind == "strata":
            body, moments = _read_strata(data, dim)
        else:
            body = _read_extension(data, dim)
    except DocumentError:
        raise
    except AssignmentError as exc:
        raise DocumentError(exc.message, exc.invariant) from exc
    return ModelDocument(kind, dim, body, name, circle, level, moments, claims)


def load_document(path: Union[str, Path]) -> ModelDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


# ---- printing -------------------------------------------------------------


def _span_block(h: Subalgebra) -> dict:
    return {"span": [format_vector(row) for row in h.basis.rows]}


def _gkm_body(p: GkmPresentation) -> dict:
    components = []
    for component in p.components:
        entry: dict[str, Any] = {"name": component.name}
        if component.moment is not None:
            entry["moment"] = format_rational(component.moment)
        if component.moment_vector is not None:
            entry["moment_vector"] = format_vector(component.moment_vector)
        if component.weights is not None:
            entry["weights"] = [format_vector(w.coeffs) for w in component.weights]
        components.append(entry)
    pieces = [
        {"g": _span_block(piece.g), "members": [p.components[m].name for m in piece.members]}
        for piece in p.pieces
    ]
    body = {"components": components, "pieces": pieces}
    if p.generalized:
        body["generalized"] = True
    return body


def _strata_body(space: StratifiedSpace, moments) -> dict:
    by_id = dict(moments or ())
    strata = []
    for stratum in space.strata:
        entry: dict[str, Any] = {"id": stratum.id, "isotropy": _span_block(stratum.isotropy)}
        if stratum.id in by_id:
            entry["moment_vector"] = format_vector(by_id[stratum.id])
        strata.append(entry)
    return {"strata": strata, "order": [list(pair) for pair in space.relations()]}


def _extension_body(problem: ExtensionProblem) -> dict:
    return {
        "forms": [format_vector(f.coeffs) for f in problem.forms],
        "constraints": [
            {"index_set": [i + 1 for i in c.index_set], "target": format_polynomial(c.target)}
            for c in problem.constraints
        ],
    }


def document_data(document: ModelDocument) -> dict:
    data: dict[str, Any] = {"kind": document.kind, "torus_dim": document.torus_dim}
    if document.name is not None:
        data["name"] = document.name
    if document.circle is not None:
        data["circle"] = format_vector(document.circle.basis.rows[0])
    if document.level != ZERO:
        data["level"] = format_rational(document.level)
    if isinstance(document.body, GkmPresentation):
        data.update(_gkm_body(document.body))
    elif isinstance(document.body, StratifiedSpace):
        data.update(_strata_body(document.body, document.moments))
    else:
        data.update(_extension_body(document.body))
    if document.claims:
        data["claims"] = list(document.claims)
    return data


def print_document(document: ModelDocument) -> str:
    return json.dumps(document_data(document), indent=2, sort_keys=True) + "\n"

"""JSON documents describing a complex, a graph or a monomial ideal.

Shape::

    {"version": 1, "kind": "complex", "vertices": ["a", "b", ...],
     "facets": [["a", "e", "f"], ...]}

``kind`` is one of ``complex`` (key ``facets``), ``graph`` (key ``edges``)
or ``ideal`` (key ``generators`` for squarefree supports, or ``exponents``
for exponent vectors over ``vertices``).  ``vertices`` is optional except
for ``exponents``; when present it fixes the vertex order, otherwise labels
are numbered in order of first appearance.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .complex import Graph, SimplicialComplex
from .monomial import MonomialIdeal

FORMAT_VERSION = 1
KINDS = {"complex": "facets", "graph": "edges", "ideal": ("generators", "exponents")}
Label = str | int


class DocumentError(ValueError):
    """A parse error tied to a position in the document (``path``)."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.message = message

    def as_dict(self) -> dict:
        return {"error": "document", "path": self.path, "message": self.message}


@dataclass(frozen=True)
class Document:
    kind: str
    labels: tuple[Label, ...]
    body_key: str
    # label lists for facets/edges/generators, int lists for exponents
    body: tuple[tuple, ...]
    explicit_vertices: bool = True

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self) -> dict[Label, int]:
        return {lab: k for k, lab in enumerate(self.labels)}

    def _sets(self) -> list[list[int]]:
        idx = self.index()
        return [[idx[x] for x in item] for item in self.body]

    def to_complex(self) -> SimplicialComplex:
        if self.kind == "complex":
            return SimplicialComplex.from_facets(self._sets(), n=self.n)
        if self.kind == "graph":
            return self.to_graph().as_complex()
        raise DocumentError("kind", f"expected a complex or graph document, got {self.kind!r}")

    def to_graph(self) -> Graph:
        if self.kind == "graph":
            return Graph.from_edges(self.n, self._sets())
        if self.kind == "complex":
            cx = self.to_complex()
            if cx.dim > 1:
                raise DocumentError("facets", "complex has faces of dimension above 1, not a graph")
            return Graph.from_edges(self.n, [f for f in cx.facets if len(f) == 2])
        raise DocumentError("kind", f"expected a graph document, got {self.kind!r}")

    def to_ideal(self) -> MonomialIdeal:
        if self.kind != "ideal":
            raise DocumentError("kind", f"expected an ideal document, got {self.kind!r}")
        if self.body_key == "exponents":
            return MonomialIdeal.from_gens(self.n, self.body)
        return MonomialIdeal.from_supports(self.n, self._sets())

    def label(self, v: int) -> Label:
        return self.labels[v]

    def labelled(self, face) -> list[Label]:
        return [self.labels[v] for v in face]


def _is_label(x: Any) -> bool:
    return (isinstance(x, str) and x != "") or (isinstance(x, int) and not isinstance(x, bool))


def parse_document(obj: Any) -> Document:
    if not isinstance(obj, dict):
        raise DocumentError("", "document must be a JSON object")
    kind = obj.get("kind", "complex")
    if kind not in KINDS:
        raise DocumentError("kind", f"unknown kind {kind!r}; expected one of {sorted(KINDS)}")
    body_keys = KINDS[kind] if isinstance(KINDS[kind], tuple) else (KINDS[kind],)
    allowed = {"version", "kind", "vertices", *body_keys}
    for key in obj:
        if key not in allowed:
            raise DocumentError(key, f"unknown field for a {kind} document")
    if "version" not in obj:
        raise DocumentError("version", "missing")
    if obj["version"] != FORMAT_VERSION:
        raise DocumentError("version", f"unsupported version {obj['version']!r}")
    present = [k for k in body_keys if k in obj]
    if len(present) != 1:
        raise DocumentError("", f"exactly one of {list(body_keys)} is required")
    key = present[0]

    labels: list[Label] | None = None
    if "vertices" in obj:
        vs = obj["vertices"]
        if not isinstance(vs, list):
            raise DocumentError("vertices", "must be a list")
        for k, x in enumerate(vs):
            if not _is_label(x):
                raise DocumentError(f"vertices[{k}]", f"bad label {x!r}")
        if len(set(vs)) != len(vs):
            dup = next(x for k, x in enumerate(vs) if x in vs[:k])
            raise DocumentError("vertices", f"duplicate label {dup!r}")
        labels = list(vs)

    items = obj[key]
    if not isinstance(items, list):
        raise DocumentError(key, "must be a list")

    if key == "exponents":
        if labels is None:
            raise DocumentError("vertices", "required for exponent-vector ideals")
        body = []
        for k, e in enumerate(items):
            path = f"{key}[{k}]"
            if not isinstance(e, list) or len(e) != len(labels):
                raise DocumentError(path, f"must be a list of {len(labels)} integers")
            for c, x in enumerate(e):
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise DocumentError(f"{path}[{c}]", f"bad exponent {x!r}")
            body.append(tuple(e))
        return Document(kind, tuple(labels), key, tuple(body))

    explicit = labels is not None
    seen: list[Label] = [] if labels is None else labels
    known = set(seen)
    body = []
    for k, item in enumerate(items):
        path = f"{key}[{k}]"
        if not isinstance(item, list):
            raise DocumentError(path, "must be a list of labels")
        if not item:
            raise DocumentError(path, "empty")
        if key == "edges" and len(item) != 2:
            raise DocumentError(path, "an edge needs exactly two labels")
        for c, x in enumerate(item):
            if not _is_label(x):
                raise DocumentError(f"{path}[{c}]", f"bad label {x!r}")
            if x not in known:
                if explicit:
                    raise DocumentError(f"{path}[{c}]", f"unknown label {x!r}")
                known.add(x)
                seen.append(x)
        if len(set(item)) != len(item):
            raise DocumentError(path, "repeated label")
        body.append(tuple(item))
    if not body and kind == "complex":
        raise DocumentError(key, "a complex needs at least one facet")
    return Document(kind, tuple(seen), key, tuple(body), explicit)


def loads(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return parse_document(obj)


def load(path: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def to_json_obj(doc: Document) -> dict:
    out: dict[str, Any] = {"version": FORMAT_VERSION, "kind": doc.kind}
    if doc.explicit_vertices or doc.body_key == "exponents":
        out["vertices"] = list(doc.labels)
    out[doc.body_key] = [list(x) for x in doc.body]
    return out


def emit_document(doc: Document) -> str:
    return json.dumps(to_json_obj(doc), indent=2) + "\n"


def complex_document(cx: SimplicialComplex, labels=None) -> Document:
    labels = tuple(labels) if labels is not None else tuple(range(cx.n))
    return Document("complex", labels, "facets", tuple(tuple(labels[v] for v in f) for f in cx.facets))


def graph_document(g: Graph, labels=None) -> Document:
    labels = tuple(labels) if labels is not None else tuple(range(g.n))
    return Document("graph", labels, "edges", tuple((labels[u], labels[v]) for u, v in g.edges))

"""The ``.mlat`` text format for multiplicative lattices.

Example::

    # the three-element chain with meet as product
    lattice C3
    elements 0 m 1
    order 0 < m, m < 1
    mult meet

A directive starts at column 1; indented lines continue the previous
directive. Pairs and triples are separated by commas or line breaks.
``order`` pairs denote <= and may be chained (``0 < a < 1``). An explicit
``mult`` lists ``a*b=c`` triples; products with top or bottom may be
omitted. ``query`` directives name CLI commands to run on the document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    ConflictingTriple,
    DuplicateTriple,
    MissingTriple,
    MlatSyntaxError,
    UndeclaredLabel,
)
from .lattice import validate_lattice
from .quantale import MultiplicativeLattice, MultTable, validate_quantale

LABEL_RE = re.compile(r"[^\s,<*=#]+")
_TOKEN_RE = re.compile(r"[^\s,<*=#]+|[,<*=]")
DIRECTIVES = ("lattice", "elements", "order", "mult", "query")

Pos = tuple[int, int]


@dataclass(frozen=True)
class MlatDocument:
    name: str
    elements: tuple[str, ...]
    order_pairs: tuple[tuple[str, str], ...]
    mult: str | tuple[tuple[str, str, str], ...]
    queries: tuple[str, ...] = ()
    # source positions for diagnostics; excluded from equality
    positions: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def is_meet(self) -> bool:
        return self.mult == "meet"


@dataclass
class _Tok:
    text: str
    line: int
    col: int
    newline_before: bool = False


def _tokenize(text: str) -> list[list[_Tok]]:
    """Split into directives, each a token list; tokens on a continuation line
    are marked so line breaks can act as separators."""
    directives: list[list[_Tok]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN_RE.finditer(line)]
        if line[0].isspace():
            if not directives:
                raise MlatSyntaxError("continuation line before any directive", lineno,
                                      toks[0].col, DIRECTIVES)
            toks[0].newline_before = True
            directives[-1].extend(toks)
        else:
            directives.append(toks)
    return directives


def _items(toks: list[_Tok]) -> list[list[_Tok]]:
    """Split on commas and line breaks, dropping empty items."""
    out: list[list[_Tok]] = [[]]
    for t in toks:
        if t.text == ",":
            out.append([])
            continue
        if t.newline_before and out[-1]:
            out.append([])
        out[-1].append(t)
    return [item for item in out if item]


def _expect_label(t: _Tok) -> str:
    if not LABEL_RE.fullmatch(t.text):
        raise MlatSyntaxError(f"unexpected {t.text!r}", t.line, t.col, ("label",))
    return t.text


def _parse_order(toks, head) -> tuple[list[tuple[str, str]], list[tuple[Pos, Pos]]]:
    pairs, where = [], []
    for item in _items(toks):
        labels = [_expect_label(item[0])]
        for k in range(1, len(item), 2):
            if item[k].text != "<":
                raise MlatSyntaxError(f"unexpected {item[k].text!r}", item[k].line, item[k].col,
                                      ("'<'", "','"))
            if k + 1 >= len(item):
                t = item[k]
                raise MlatSyntaxError("incomplete order pair", t.line, t.col + 1, ("label",))
            labels.append(_expect_label(item[k + 1]))
        if len(labels) < 2:
            t = item[0]
            raise MlatSyntaxError("incomplete order pair", t.line, t.col + len(t.text), ("'<'",))
        for k in range(len(labels) - 1):
            pairs.append((labels[k], labels[k + 1]))
            a, b = item[2 * k], item[2 * k + 2]
            where.append(((a.line, a.col), (b.line, b.col)))
    return pairs, where


def _parse_mult(toks, head):
    if len(toks) == 1 and toks[0].text == "meet":
        return "meet", []
    triples, where = [], []
    for item in _items(toks):
        shape = ("label", "*", "label", "=", "label")
        for k, kind in enumerate(shape):
            if k >= len(item):
                last = item[-1]
                raise MlatSyntaxError("incomplete product triple", last.line,
                                      last.col + len(last.text), (repr(kind) if kind != "label" else kind,))
            t = item[k]
            if kind == "label":
                _expect_label(t)
            elif t.text != kind:
                raise MlatSyntaxError(f"unexpected {t.text!r}", t.line, t.col, (f"'{kind}'",))
        if len(item) > 5:
            t = item[5]
            raise MlatSyntaxError(f"unexpected {t.text!r}", t.line, t.col, ("',' or line break",))
        triples.append((item[0].text, item[2].text, item[4].text))
        where.append(tuple((item[k].line, item[k].col) for k in (0, 2, 4)))
    if not triples:
        raise MlatSyntaxError("empty mult directive", head.line, head.col + len(head.text),
                              ("'meet'", "a*b=c triples"))
    return tuple(triples), where


def parse_mlat(text: str) -> MlatDocument:
    """Parse a document; labels are resolved but no lattice law is checked yet.

    Use :func:`build_structure` (or :func:`load_mlat`) to validate.
    """
    seen: dict[str, _Tok] = {}
    name = None
    elements: list[str] = []
    elem_pos: dict[str, Pos] = {}
    order: list[tuple[str, str]] = []
    order_pos: list[tuple[Pos, Pos]] = []
    mult = None
    mult_pos: list = []
    queries: list[str] = []
    last_line = 1
    for toks in _tokenize(text):
        head, rest = toks[0], toks[1:]
        last_line = toks[-1].line
        if head.text not in DIRECTIVES:
            raise MlatSyntaxError(f"unknown directive {head.text!r}", head.line, head.col,
                                  tuple(repr(d) for d in DIRECTIVES))
        if head.text != "query" and head.text in seen:
            raise MlatSyntaxError(f"repeated {head.text!r} directive", head.line, head.col)
        seen.setdefault(head.text, head)
        if head.text == "lattice":
            if len(rest) != 1:
                t = rest[1] if rest else head
                col = t.col if rest else head.col + len(head.text)
                raise MlatSyntaxError("lattice takes exactly one name", t.line, col, ("name",))
            name = _expect_label(rest[0])
        elif head.text == "elements":
            for t in rest:
                if t.text == ",":
                    continue
                lab = _expect_label(t)
                if lab in elem_pos:
                    raise MlatSyntaxError(f"element {lab!r} declared twice", t.line, t.col)
                elements.append(lab)
                elem_pos[lab] = (t.line, t.col)
            if not elements:
                raise MlatSyntaxError("no elements declared", head.line,
                                      head.col + len(head.text), ("label",))
        elif head.text == "order":
            order, order_pos = _parse_order(rest, head)
        elif head.text == "mult":
            if not rest:
                raise MlatSyntaxError("empty mult directive", head.line,
                                      head.col + len(head.text), ("'meet'", "a*b=c triples"))
            mult, mult_pos = _parse_mult(rest, head)
        else:
            if not rest:
                raise MlatSyntaxError("empty query", head.line, head.col + len(head.text),
                                      ("command",))
            queries.append(" ".join(t.text for t in rest))
    for required in ("lattice", "elements", "mult"):
        if required not in seen:
            raise MlatSyntaxError(f"missing {required!r} directive", last_line + 1, 1,
                                  (repr(required),))
    declared = set(elements)
    for (a, b), (pa, pb) in zip(order, order_pos):
        for lab, p in ((a, pa), (b, pb)):
            if lab not in declared:
                raise UndeclaredLabel(f"label {lab!r} is not declared in elements", *p)
    if mult != "meet":
        for triple, ps in zip(mult, mult_pos):
            for lab, p in zip(triple, ps):
                if lab not in declared:
                    raise UndeclaredLabel(f"label {lab!r} is not declared in elements", *p)
    positions = {"mult": (seen["mult"].line, seen["mult"].col), "mult_triples": mult_pos,
                 "elements": elem_pos}
    return MlatDocument(name, tuple(elements), tuple(order), mult, tuple(queries), positions)


def build_structure(doc: MlatDocument) -> MultiplicativeLattice:
    """Validate ``doc`` through the lattice and quantale checks."""
    idx = {lab: i for i, lab in enumerate(doc.elements)}
    n = len(doc.elements)
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in doc.order_pairs:
        rel[idx[a]][idx[b]] = True
    lat = validate_lattice(rel, list(doc.elements))
    if doc.is_meet:
        return validate_quantale(lat, MultTable(lat.meet_table), doc.name)
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    where: dict[tuple[int, int], Pos] = {}
    pos = doc.positions.get("mult_triples") or [((0, 0),) * 3] * len(doc.mult)
    for (a, b, c), p in zip(doc.mult, pos):
        i, j, v = idx[a], idx[b], idx[c]
        key = (min(i, j), max(i, j))
        if key in where:
            prev = table[i][j]
            cls = DuplicateTriple if prev == v else ConflictingTriple
            what = "repeated" if prev == v else f"conflicts with earlier {a}*{b}={lat.labels[prev]}"
            raise cls(f"product {a}*{b}={c} {what} (first given at line {where[key][0]})", *p[0])
        where[key] = p[0]
        table[i][j] = table[j][i] = v
    for x in range(n):
        for y, implied in ((lat.top, x), (lat.bottom, lat.bottom)):
            if table[x][y] is None:
                table[x][y] = table[y][x] = implied
    line, col = doc.positions.get("mult", (0, 0))
    for i in range(n):
        for j in range(i, n):
            if table[i][j] is None:
                raise MissingTriple(
                    f"no product given for {lat.labels[i]}*{lat.labels[j]}", line, col)
    return validate_quantale(lat, table, doc.name)


def load_mlat(text: str) -> MultiplicativeLattice:
    return build_structure(parse_mlat(text))


# ---- serialisation ----------------------------------------------------------------

_PER_LINE = 6


def _wrap(keyword: str, items: list[str]) -> str:
    if not items:
        return keyword
    lines = []
    for k in range(0, len(items), _PER_LINE):
        lines.append(", ".join(items[k:k + _PER_LINE]))
    return f"{keyword} " + ",\n  ".join(lines)


def serialize_mlat(doc: MlatDocument) -> str:
    out = [f"lattice {doc.name}", "elements " + " ".join(doc.elements)]
    if doc.order_pairs:
        out.append(_wrap("order", [f"{a} < {b}" for a, b in doc.order_pairs]))
    if doc.is_meet:
        out.append("mult meet")
    else:
        out.append(_wrap("mult", [f"{a}*{b}={c}" for a, b, c in doc.mult]))
    out.extend(f"query {q}" for q in doc.queries)
    return "\n".join(out) + "\n"


def document_of(ml: MultiplicativeLattice, queries: tuple[str, ...] = ()) -> MlatDocument:
    """Describe ``ml`` by its Hasse covers and, unless it is a frame, the
    products of non-identity, non-bottom pairs."""
    lat = ml.lattice
    labels = lat.labels
    order = tuple((labels[a], labels[b]) for a, b in sorted(lat.covers))
    if ml.is_frame():
        mult: str | tuple = "meet"
    else:
        inner = [x for x in range(lat.n) if x not in (lat.top, lat.bottom)]
        mult = tuple((labels[a], labels[b], labels[ml.product[a][b]])
                     for k, a in enumerate(inner) for b in inner[k:])
        if not mult:
            mult = "meet"
    return MlatDocument(_doc_name(ml.name), tuple(labels), order, mult, tuple(queries))


def _doc_name(name: str) -> str:
    cleaned = re.sub(r"[\s,<*=#]", "_", name)
    return cleaned or "L"

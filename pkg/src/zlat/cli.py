"""Command-line front end: ``zlat <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 theorem violation or
counterexample found, 3 parse error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import spectra as sp
from . import ztheory as zt
from .errors import (
    BadParam,
    CeilingExceeded,
    ForeignElement,
    LatticeError,
    MlatError,
    QuantaleError,
    UnknownCommand,
    UnknownProperty,
    UnknownTheoremId,
)
from .mlat import MlatDocument, build_structure, document_of, parse_mlat, serialize_mlat
from .quantale import MultiplicativeLattice, named_fixture, named_fixtures
from .verifier.corpus import CorpusSpec
from .verifier.search import PROPERTIES, search_counterexample
from .verifier.theorems import CATALOG, Verdict, run_theorems

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3, 64
COMMANDS = ("validate", "classify", "zmap", "closure", "verify", "search", "fixtures")


@dataclass(frozen=True)
class Report:
    data: dict
    text: str
    status: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, sort_keys=True, indent=2, ensure_ascii=False)
        return self.text


# ---- formatting ---------------------------------------------------------------

def _table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _cell(v: object) -> str:
    if isinstance(v, bool):
        return "yes" if v else "-"
    if isinstance(v, (list, tuple)):
        return "{" + ", ".join(map(str, v)) + "}"
    return str(v)


def _names(ml: MultiplicativeLattice, xs) -> list[str]:
    # declaration order, not set order
    return [ml.lattice.labels[x] for x in sorted(xs)]


def resolve_element(ml: MultiplicativeLattice, label: str) -> int:
    """Element by label; ``0`` and ``1`` also name bottom and top."""
    lat = ml.lattice
    if label in lat.labels:
        return lat.labels.index(label)
    if label == "0":
        return lat.bottom
    if label == "1":
        return lat.top
    raise ForeignElement(f"{ml.name} has no element labelled {label!r}")


# ---- commands -------------------------------------------------------------------------

def _validate(ml: MultiplicativeLattice) -> Report:
    lat = ml.lattice
    preds = sp.lattice_predicates(ml)
    zp = zt.lattice_z_predicates(ml)
    data = {
        "structure": ml.name,
        "valid": True,
        "size": lat.n,
        "elements": list(lat.labels),
        "bottom": lat.labels[lat.bottom],
        "top": lat.labels[lat.top],
        "frame": preds.frame,
        "semisimple": preds.semisimple,
        "regular": preds.regular,
        "maximal_count": preds.maximal_count,
        "szi": zp.szi,
        "pz": zp.pz,
        "z_join_closed": zp.z_join_closed,
        "z_product_closed": zp.z_product_closed,
    }
    text = (f"{ml.name}: valid multiplicative lattice on {lat.n} elements "
            f"(bottom {data['bottom']}, top {data['top']})\n"
            + _table(["property", "value"],
                     [(k, data[k]) for k in ("frame", "semisimple", "regular", "maximal_count",
                                              "szi", "pz", "z_join_closed", "z_product_closed")]))
    return Report(data, text)


def _classify_row(ml: MultiplicativeLattice, x: int) -> dict:
    lat = ml.lattice
    rec = sp.classify_element(ml, x)
    row = {"element": lat.labels[x], **rec.flags(), "z": zt.is_z_element(ml, x),
           "radical": lat.labels[rec.radical], "m_a": lat.labels[zt.m_of(ml, x)],
           "cz": lat.labels[zt.z_closure(ml, x)]}
    return row


_CLASSIFY_COLS = ("element", "proper", "maximal", "prime", "semiprime", "primary", "irreducible",
                  "strongly_irreducible", "complemented", "radical_element", "idempotent", "z",
                  "radical", "m_a", "cz")


def _classify(ml: MultiplicativeLattice, element: str | None = None) -> Report:
    xs = [resolve_element(ml, element)] if element else range(ml.lattice.n)
    rows = [_classify_row(ml, x) for x in xs]
    text = f"{ml.name}: element classification\n" + _table(
        _CLASSIFY_COLS, [[r[c] for c in _CLASSIFY_COLS] for r in rows])
    return Report({"structure": ml.name, "rows": rows}, text)


_ZMAP_COLS = ("element", "M_a", "m_a", "cz") + zt.ZProfile.FLAGS


def _zmap(ml: MultiplicativeLattice) -> Report:
    lat = ml.lattice
    rows = []
    for prof in zt.z_profiles(ml):
        rows.append({"element": lat.labels[prof.element], "M_a": _names(ml, prof.M_a),
                     "m_a": lat.labels[prof.m_a], "cz": lat.labels[prof.cz], **prof.flags()})
    data = {
        "structure": ml.name,
        "rows": rows,
        "z_elements": _names(ml, zt.z_elements(ml)),
        "minimal_z_primes": [lat.labels[p] for p in zt.minimal_z_primes(ml)]
        if lat.bottom != lat.top else [],
    }
    text = (f"{ml.name}: z-map  Z(L) = {_cell(data['z_elements'])}\n"
            + _table(_ZMAP_COLS, [[r[c] for c in _ZMAP_COLS] for r in rows]))
    return Report(data, text)


def _closure(ml: MultiplicativeLattice, element: str) -> Report:
    lat = ml.lattice
    x = resolve_element(ml, element)
    Ma, ma = zt.maximal_cover(ml, x)
    data = {"structure": ml.name, "element": lat.labels[x],
            "cz": lat.labels[zt.z_closure(ml, x)], "m_a": lat.labels[ma],
            "M_a": _names(ml, Ma), "radical": lat.labels[sp.radical(ml, x)]}
    text = (f"{ml.name}: cz({data['element']}) = {data['cz']}\n"
            + _table(["quantity", "value"], [(k, data[k]) for k in ("M_a", "m_a", "radical")]))
    return Report(data, text)


def _verify(ml: MultiplicativeLattice, theorems: Sequence[str] | None = None) -> Report:
    reports = run_theorems(ml, theorems or None)
    failed = [r for r in reports if r.verdict is Verdict.FAIL]
    rows = [r.to_dict() for r in reports]
    text = f"{ml.name}: {len(reports)} theorems, {len(failed)} failed\n" + _table(
        ["theorem", "verdict", "cases", "witness / note"],
        [(r["theorem"], r["verdict"], r["cases_checked"],
          _witness_text(r["witness"]) if r["witness"] is not None else r["note"]) for r in rows])
    return Report({"structure": ml.name, "reports": rows}, text,
                  EXIT_VIOLATION if failed else EXIT_OK)


def _witness_text(w) -> str:
    return " ".join(_cell(v) if isinstance(v, (list, tuple)) else str(v) for v in w)


def _search(prop: str, max_size: int, mult: str = "all") -> Report:
    res = search_counterexample(prop, CorpusSpec(max_size, mult))
    data = res.to_dict()
    if res.found:
        text = (f"{prop}: witness in {res.structure_name} at "
                f"({', '.join(res.element_labels)}) after {res.searched} structures")
    else:
        text = f"{prop}: exhausted, {data['note']}"
    return Report(data, text, EXIT_VIOLATION if res.found else EXIT_OK)


def _fixtures(name: str | None = None) -> Report:
    if name is None:
        fx = named_fixtures()
        rows = [(k, ml.lattice.n, ml.is_frame()) for k, ml in fx.items()]
        data = {"fixtures": [{"name": k, "size": n, "frame": f} for k, n, f in rows]}
        text = _table(["name", "size", "frame"], rows)
        return Report(data, text)
    ml = named_fixture(name)
    mlat = serialize_mlat(document_of(ml))
    return Report({"name": ml.name, "mlat": mlat}, mlat.rstrip("\n"))


def run_query(doc: MlatDocument | MultiplicativeLattice, command: str, fmt: str = "text") -> str:
    """Run one command (``"zmap"``, ``"closure m"``, ``"verify HOM-INV"`` ...) on a document."""
    return execute(doc, command).render(fmt)


def execute(doc: MlatDocument | MultiplicativeLattice, command: str) -> Report:
    parts = command.split()
    if not parts:
        raise UnknownCommand("empty command")
    cmd, args = parts[0], parts[1:]
    if cmd == "search":
        if not 1 <= len(args) <= 3:
            raise UnknownCommand("search takes PROPERTY [MAX_SIZE [MULT]]")
        return _search(args[0], int(args[1]) if len(args) > 1 else 5,
                       args[2] if len(args) > 2 else "all")
    if cmd == "fixtures":
        return _fixtures(args[0] if args else None)
    if cmd not in COMMANDS:
        raise UnknownCommand(f"unknown command {cmd!r}; known: {', '.join(COMMANDS)}")
    ml = doc if isinstance(doc, MultiplicativeLattice) else build_structure(doc)
    if cmd == "validate":
        return _validate(ml)
    if cmd == "classify":
        return _classify(ml, args[0] if args else None)
    if cmd == "zmap":
        return _zmap(ml)
    if cmd == "closure":
        if len(args) != 1:
            raise UnknownCommand("closure takes exactly one element label")
        return _closure(ml, args[0])
    return _verify(ml, args)


# ---- argument parsing ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text tables")
    p = _Parser(prog="zlat", description="z-elements of finite multiplicative lattices",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, file=True):
        sp_ = sub.add_parser(name, help=help_, parents=[common])
        if file:
            sp_.add_argument("file", help=".mlat document ('-' for stdin)")
        return sp_

    add("validate", "check the lattice and quantale laws")
    c = add("classify", "per-element prime-type and irreducible-type flags")
    c.add_argument("--element", help="classify one element")
    add("zmap", "M_a, m_a, cz(a) and z-flags for every element")
    c = add("closure", "z-closure of one element")
    c.add_argument("--element", required=True)
    c = add("verify", "run the theorem catalogue")
    c.add_argument("--theorem", action="append", choices=list(CATALOG), metavar="ID",
                   help="restrict to this theorem (repeatable)")
    c = add("search", "bounded counterexample search over the corpus", file=False)
    c.add_argument("--property", required=True, choices=list(PROPERTIES), metavar="ID")
    c.add_argument("--max-size", type=int, required=True)
    c.add_argument("--mult", choices=("all", "frame-only"), default="all")
    c = add("fixtures", "list built-in structures or print one as .mlat", file=False)
    c.add_argument("name", nargs="?")
    add("run", "run the query directives stored in the document")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _dispatch(args) -> list[Report]:
    if args.command == "search":
        return [_search(args.property, args.max_size, args.mult)]
    if args.command == "fixtures":
        return [_fixtures(args.name)]
    doc = parse_mlat(_read(args.file))
    ml = build_structure(doc)
    if args.command == "run":
        return [execute(ml, q) for q in doc.queries]
    if args.command == "classify":
        return [_classify(ml, args.element)]
    if args.command == "closure":
        return [_closure(ml, args.element)]
    if args.command == "verify":
        return [_verify(ml, args.theorem)]
    return [execute(ml, args.command)]


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = "json" if getattr(args, "json", False) else "text"
    where = getattr(args, "file", None) or "zlat"
    try:
        reports = _dispatch(args)
    except MlatError as e:
        print(f"{where}:{e}", file=sys.stderr)
        return EXIT_PARSE
    except (UnknownCommand, UnknownTheoremId, UnknownProperty, ForeignElement, BadParam,
            CeilingExceeded) as e:
        print(f"{where}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LatticeError, QuantaleError) as e:
        print(f"{where}: invalid structure: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"{where}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if fmt == "json" and args.command == "run":
        print(json.dumps([r.data for r in reports], sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(r.render(fmt) for r in reports))
    return max((r.status for r in reports), default=EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py``.
"""

import re
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracle  # noqa: E402
from zlat import ztheory as zt  # noqa: E402
from zlat.cli import main  # noqa: E402
from zlat.errors import MlatError  # noqa: E402
from zlat.mlat import build_structure, document_of, load_mlat, parse_mlat, serialize_mlat  # noqa: E402
from zlat.quantale import named_fixtures  # noqa: E402
from zlat.verifier.corpus import (  # noqa: E402
    CorpusSpec,
    canonical_key,
    corpus,
    lattices_of_size,
    naive_lattice_classes,
)
from zlat.verifier.search import search_counterexample  # noqa: E402
from zlat.verifier.theorems import CATALOG, REQUIRED_RESULTS, RESULTS as CATALOG_RESULTS, Verdict, recheck, run_theorems  # noqa: E402,E501
from zlat import spectra as sp  # noqa: E402

DATA = Path(__file__).parent / "data"
RESULTS: dict[int, tuple[bool, str]] = {}

_FULL = None


def full_corpus():
    global _FULL
    if _FULL is None:
        _FULL = corpus(5) + list(named_fixtures().values())
    return _FULL


def report(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = (ok, detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def names(ml, xs):
    return {ml.lattice.labels[x] for x in xs}


def test_criterion_1_definition_equivalence():
    t = time.perf_counter()
    bad, checked = [], 0
    for ml in full_corpus():
        for x in range(ml.lattice.n):
            checked += 1
            if len(set(zt.z_definitions(ml, x))) != 1:
                bad.append((ml.name, ml.lattice.labels[x]))
    dt = time.perf_counter() - t
    report(1, not bad and dt < 300,
           f"{len(full_corpus())} structures, {checked} elements, {len(bad)} disagreements, {dt:.2f}s")


def test_criterion_2_fixture_golden_values():
    fx = named_fixtures()
    d12, z8, b4, c3 = fx["D12"], fx["Z8"], fx["B4"], fx["C3"]
    L, le, pr = oracle.zn(12)
    checks = {
        "Z(D12)": names(d12, zt.z_elements(d12)) == {"(1)", "(2)", "(3)", "(6)"}
        == oracle.names(L, oracle.z_elements(le)),
        "cz(0) in D12": d12.lattice.labels[zt.z_closure(d12, d12.lattice.bottom)] == "(6)"
        == d12.lattice.labels[sp.jacobson_radical(d12)] == L[oracle.cz(le, L.index("(12)"))],
        "MinZP(D12)": names(d12, zt.minimal_z_primes(d12)) == {"(2)", "(3)"}
        == oracle.names(L, oracle.minimal_z_primes(le, pr)),
        "Z(Z8)": names(z8, zt.z_elements(z8)) == {"1", "m"},
        "Z(B4)": names(b4, zt.z_elements(b4)) == {"0", "a", "b", "1"},
        "Z(C3)": names(c3, zt.z_elements(c3)) == {"m", "1"},
    }
    failed = [k for k, v in checks.items() if not v]
    report(2, not failed, f"{len(checks) - len(failed)}/{len(checks)} golden values exact"
           + (f"; wrong: {failed}" if failed else ""))


def test_criterion_3_theorem_suite():
    verdicts = Counter()
    fails: dict[str, list[str]] = {}
    for ml in full_corpus():
        for r in run_theorems(ml):
            verdicts[r.verdict] += 1
            if r.verdict is Verdict.FAIL:
                assert recheck(ml, r.theorem, r.witness)
                fails.setdefault(r.theorem, []).append(ml.name)
    missing = set(REQUIRED_RESULTS) - set(CATALOG_RESULTS)
    detail = (f"{len(CATALOG)} ids x {len(full_corpus())} structures: "
              f"{verdicts[Verdict.PASS]} pass, {verdicts[Verdict.NOT_APPLICABLE]} n/a, "
              f"{verdicts[Verdict.FAIL]} fail; coverage table "
              f"{'complete' if not missing else 'missing ' + str(sorted(missing))}")
    if fails:
        detail += "; failing ids: " + ", ".join(f"{k} on {len(v)}" for k, v in sorted(fails.items()))
    report(3, not fails and not missing, detail)


def test_criterion_4_product_closure_biconditional():
    mismatches = [ml.name for ml in full_corpus()
                  if zt.is_szi(ml) != zt.z_product_closed(ml)]
    z8 = named_fixtures()["Z8"]
    i = z8.lattice.index
    certified = (not zt.is_szi(z8) and z8.product[i("m")][i("m")] == i("q")
                 and i("q") not in zt.z_elements(z8))
    report(4, not mismatches and certified,
           f"{len(mismatches)} partition mismatches; Z8 certifies the non-szi side: {certified}")


def test_criterion_5_pz_characterisation():
    from zlat.verifier.theorems import pz_conditions
    split = [ml.name for ml in full_corpus() if len(set(pz_conditions(ml))) != 1]
    fx = named_fixtures()
    anchors = (pz_conditions(fx["C3"]) == (False,) * 4
               and pz_conditions(fx["D12"]) == (True,) * 4
               and pz_conditions(fx["Z8"]) == (True,) * 4)
    report(5, not split and anchors,
           f"{len(split)} structures with mixed conditions; C3 all-false, D12/Z8 all-true: {anchors}")


def test_criterion_6_quotient_frame():
    bad = []
    szi = 0
    for ml in full_corpus():
        v = zt.quotient_violation(ml)
        if v is not None:
            bad.append((ml.name, v))
        szi += zt.is_szi(ml)
        zt.z_quotient(ml).as_multiplicative_lattice()
    report(6, not bad, f"{len(bad)} violations over {len(full_corpus())} structures "
           f"(nucleus identities checked on {szi} szi structures)")


def test_criterion_7_searches():
    lines, ok = [], True
    for prop, want in (("ZPRODUCT-NOT-CLOSED", ("Z8", ("m", "m"))), ("PRIME-NOT-Z", ("C3", ("0",)))):
        t = time.perf_counter()
        r = search_counterexample(prop, CorpusSpec(5))
        dt = time.perf_counter() - t
        hit = r.found and (r.structure_name, r.element_labels) == want and dt < 1.0
        ok &= hit
        lines.append(f"{prop} -> {r.structure_name} {r.element_labels} in {dt * 1000:.0f}ms")
    for prop in ("ZERO-Z-NOT-SEMISIMPLE", "STRONGZ-NEQ-Z"):
        r = search_counterexample(prop, CorpusSpec(5))
        lines.append(f"{prop} n<=5 -> {r.to_dict()['outcome']} ({r.searched} structures)")
    report(7, ok, "; ".join(lines))


def test_criterion_8_enumeration():
    counts = [len(lattices_of_size(n)) for n in range(1, 6)]
    naive = [len(naive_lattice_classes(n)) for n in range(1, 6)]
    streamed = corpus(5)
    distinct = len({canonical_key(ml) for ml in streamed}) == len(streamed)
    ok = counts == naive == [1, 1, 1, 2, 5] and distinct
    report(8, ok, f"counts {counts}, naive {naive}, {len(streamed)} streamed structures "
           f"pairwise non-isomorphic: {distinct}")


def test_criterion_9_parser():
    round_trips = 0
    for ml in named_fixtures().values():
        doc = document_of(ml)
        again = parse_mlat(serialize_mlat(doc))
        back = build_structure(again)
        round_trips += (again == doc and back.product == ml.product
                        and back.lattice.labels == ml.lattice.labels)
    positioned = 0
    samples = sorted((DATA / "malformed").glob("*.mlat"))
    for path in samples:
        text = path.read_text()
        want = re.search(r"expect (\d+):(\d+) (\w+)", text)
        try:
            load_mlat(text)
        except MlatError as e:
            positioned += (e.line, e.column, type(e).__name__) == (int(want[1]), int(want[2]), want[3])
    valid = str(DATA / "valid")
    codes = {
        0: main(["validate", f"{valid}/c3.mlat"]),
        1: main(["validate", f"{valid}/no_join.mlat"]),
        2: main(["search", "--property", "PRIME-NOT-Z", "--max-size", "3"]),
        3: main(["validate", str(samples[0])]),
    }
    codes_ok = all(k == v for k, v in codes.items())
    ok = round_trips == 4 and positioned == len(samples) and codes_ok
    report(9, ok, f"round trips {round_trips}/4, positioned diagnostics {positioned}/{len(samples)}, "
           f"exit codes {codes}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

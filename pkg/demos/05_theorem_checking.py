"""Checking the theorem catalog on concrete structures.

Each catalog entry is a statement with a finite set of cases and a
predicate. Running it on a structure yields pass, fail or not-applicable
(when the hypothesis is false). A failure carries a witness that can be
re-checked on its own.
"""

from collections import Counter

from zlat import named_fixture
from zlat.verifier import CATALOG, Verdict, recheck, run_theorems
from zlat.verifier.corpus import corpus

d12 = named_fixture("D12")
for r in run_theorems(d12, ["Z-MEETS", "CZ-LAWS", "EQ-PRIME"]):
    print(f"{r.theorem:<10} {r.verdict.value:<15} cases={r.cases_checked}  {r.note}")

# The catalog over every structure with at most 5 elements.
tally: dict[str, Counter] = {tid: Counter() for tid in CATALOG}
witnesses = {}
for ml in corpus(5):
    for r in run_theorems(ml):
        tally[r.theorem][r.verdict] += 1
        if r.verdict is Verdict.FAIL and r.theorem not in witnesses:
            witnesses[r.theorem] = (ml, r)

print(f"\n{'theorem':<22} pass  n/a  fail")
for tid, c in tally.items():
    print(f"{tid:<22} {c[Verdict.PASS]:>4} {c[Verdict.NOT_APPLICABLE]:>4} {c[Verdict.FAIL]:>5}")

# The preimage statements fail when any lattice endomorphism counts as a
# morphism: the constant map to the top has an empty preimage of every
# proper element. Their down-set variants over product-preserving maps hold.
for tid, (ml, r) in witnesses.items():
    print(f"\n{tid} fails on {ml.name}: {r.witness_labels}")
    print("  witness still fails on re-check:", recheck(ml, tid, r.witness))

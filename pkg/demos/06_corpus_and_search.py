"""Enumerating small structures and searching for counterexamples.

Lattices are generated up to isomorphism. Each lattice is then paired with
every multiplication that satisfies the axioms, again up to automorphism.
A search walks this stream and stops at the first witness.
"""

from collections import Counter

from zlat.verifier import PROPERTIES, CorpusSpec, enumerate_corpus, search_counterexample
from zlat.verifier.corpus import lattices_of_size

print("lattices by size:", [len(lattices_of_size(n)) for n in range(1, 7)])

sizes = Counter(ml.lattice.n for ml in enumerate_corpus(CorpusSpec(5)))
print("structures by size (all multiplications):", dict(sorted(sizes.items())))
frames = Counter(ml.lattice.n for ml in enumerate_corpus(CorpusSpec(5, mult="frame-only")))
print("structures by size (meet only):", dict(sorted(frames.items())))

for prop, (description, _) in PROPERTIES.items():
    r = search_counterexample(prop, CorpusSpec(5))
    where = f"{r.structure_name} at {r.element_labels}" if r.found else r.note
    print(f"{prop:<24} {description}\n{'':<24} -> {where}")

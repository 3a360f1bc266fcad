"""Reading and writing the .mlat text format.

Documents declare elements, order pairs and either ``mult meet`` or explicit
product triples. Products with top and bottom may be left out. Errors carry
a line and column.
"""

from zlat import document_of, load_mlat, named_fixture, parse_mlat, serialize_mlat
from zlat.cli import run_query
from zlat.errors import MlatError

TEXT = """\
# ideals of Z_8 written as the chain 0 < q < m < 1
lattice Z8
elements 0 q m 1
order 0 < q < m < 1
mult q*q=0, q*m=0,
  m*m=q
query zmap
query closure q
"""

doc = parse_mlat(TEXT)
ml = load_mlat(TEXT)
print("parsed:", doc.name, doc.elements, "queries:", doc.queries)
for q in doc.queries:
    print(f"--- {q}")
    print(run_query(ml, q))

# Any structure can be written back out and re-read unchanged.
d12 = named_fixture("D12")
out = serialize_mlat(document_of(d12))
print(out)
assert load_mlat(out).product == d12.product

broken = "lattice X\nelements 0 1\norder 0 < 2\nmult meet\n"
try:
    load_mlat(broken)
except MlatError as e:
    print("diagnostic:", e)

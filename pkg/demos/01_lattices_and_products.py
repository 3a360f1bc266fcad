"""Building finite lattices and multiplications.

A multiplicative lattice here is a finite lattice with a commutative,
associative product that has the top as identity and distributes over
joins. The ideals of Z_n are the motivating example.
"""

from zlat import chain, chain_frame, named_fixture, validate_lattice, validate_quantale, zn_ideal
from zlat.errors import DistributivityFails, NoUniqueBound

# The ideal lattice of Z_12: elements are the principal ideals (d), ordered by
# reverse divisibility, with product (a)(b) = (gcd(ab, 12)).
d12 = zn_ideal(12)
lat = d12.lattice
print(d12.name, "elements:", lat.labels)
two, three = lat.index("(2)"), lat.index("(3)")
print("(2) v (3) =", lat.labels[lat.join_table[two][three]])
print("(2) ^ (3) =", lat.labels[lat.meet_table[two][three]])
print("(2) * (2) =", lat.labels[d12.product[two][two]])

# Any lattice can use its meet as product; on a distributive lattice this is a frame.
c4 = chain_frame(4)
print(c4.name, "is a frame:", c4.is_frame())

# Residuals: the largest c with c * b <= a.
z8 = named_fixture("Z8")
i = z8.lattice.index
print("Z8: (0 : m) =", z8.lattice.labels[z8.residual(i("0"), i("m"))])

# Orders that are not lattices are rejected with a diagnostic.
# Here a and b have two minimal upper bounds, c and d.
bowtie = ["0", "a", "b", "c", "d", "1"]
below = {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}
rel = [[x == y or x == "0" or y == "1" or (x, y) in below for y in bowtie] for x in bowtie]
try:
    validate_lattice(rel, bowtie)
except NoUniqueBound as e:
    print("rejected:", e)

# The pentagon N5 is not distributive, so meet does not distribute over join.
n5 = validate_lattice(
    [[1, 1, 1, 1, 1], [0, 1, 1, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]],
    ["0", "a", "b", "c", "1"])
try:
    validate_quantale(n5, n5.meet_table, "N5")
except DistributivityFails as e:
    print("rejected:", e)

print("chain(3) labels:", chain(3).labels)

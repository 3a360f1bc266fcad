"""The quotient frame of z-elements.

Z(L) carries the product cz(ab) and the join cz(a v b). With those
operations it is a frame, and cz is a surjective map onto it that preserves
products and joins.
"""

from zlat import named_fixture, z_quotient
from zlat.ztheory import is_szi, quotient_violation, z_product_closed

for name in ("D12", "Z8", "B4"):
    ml = named_fixture(name)
    q = z_quotient(ml)
    lab = ml.lattice.labels
    print(f"== {name}: carrier {[lab[c] for c in q.carrier]}")
    for i, a in enumerate(q.carrier):
        row = "  ".join(f"{lab[a]}*{lab[b]}={lab[q.odot[i][j]]}" for j, b in enumerate(q.carrier))
        print("  ", row)
    print("   projection:", {lab[a]: lab[q.projection[a]] for a in range(ml.lattice.n)})
    print("   laws hold:", quotient_violation(ml) is None)
    frame = q.as_multiplicative_lattice()
    print("   quotient is a frame:", frame.is_frame())
    # szi structures are exactly those where Z(L) is closed under the product
    print("   szi:", is_szi(ml), " Z closed under products:", z_product_closed(ml))

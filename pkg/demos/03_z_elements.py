"""z-elements and the z-closure.

For an element a, M_a is the set of maximal elements above a and m_a is
their meet. An element x is a z-element when m_a <= x for every a <= x.
The z-closure cz(a) is the least z-element above a.
"""

from zlat import is_z_element, maximal_cover, minimal_z_primes, named_fixtures, z_closure, z_elements
from zlat.ztheory import z_definitions, z_profiles

for name, ml in named_fixtures().items():
    lat = ml.lattice
    print(f"== {name}: Z = {sorted(lat.labels[z] for z in z_elements(ml))}")
    for x in range(lat.n):
        Ma, ma = maximal_cover(ml, x)
        # the three equivalent definitions must agree on every element
        assert len(set(z_definitions(ml, x))) == 1
        print(f"   {lat.labels[x]:>5}: M_a = {sorted(lat.labels[m] for m in Ma)}, "
              f"m_a = {lat.labels[ma]}, cz = {lat.labels[z_closure(ml, x)]}, "
              f"z-element: {is_z_element(ml, x)}")

d12 = named_fixtures()["D12"]
print("minimal z-primes of D12:", [d12.lattice.labels[p] for p in minimal_z_primes(d12)])
print("z-profile of (6):")
for k, v in z_profiles(d12)[d12.lattice.index("(6)")].flags().items():
    print(f"   {k}: {v}")

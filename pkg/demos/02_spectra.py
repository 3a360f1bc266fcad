"""Prime, semiprime, primary and irreducible elements.

Each element of a structure gets a classification record. The radical of x
is the meet of the primes above it; the Jacobson radical is the meet of
the maximal elements.
"""

from zlat import classify_element, jacobson_radical, lattice_predicates, named_fixture, primes, radical
from zlat.spectra import minimal_primes_over

d12 = named_fixture("D12")
lat = d12.lattice

print(f"{'element':>8}  flags")
for x in range(lat.n):
    rec = classify_element(d12, x)
    on = [k for k, v in rec.flags().items() if v]
    print(f"{lat.labels[x]:>8}  {', '.join(on) or '-'}")

print("primes:", sorted(lat.labels[p] for p in primes(d12)))
zero = lat.bottom
print("radical of (12):", lat.labels[radical(d12, zero)])
print("minimal primes over (12):", [lat.labels[p] for p in minimal_primes_over(d12, zero)])
print("Jacobson radical:", lat.labels[jacobson_radical(d12)])
print(lattice_predicates(d12))

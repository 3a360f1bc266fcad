"""Maximal, prime and irreducible-type elements, radicals and lattice-level predicates."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import RadicalFormulaMismatch, TrivialLattice
from .lattice import ElementSet
from .quantale import MultiplicativeLattice


def _require_nontrivial(ml: MultiplicativeLattice) -> None:
    if ml.lattice.bottom == ml.lattice.top:
        raise TrivialLattice(f"{ml.name} is the one-point lattice (0 = 1)")


def maximal_elements(ml: MultiplicativeLattice) -> ElementSet:
    """Coatoms: proper elements with no proper element strictly above."""
    _require_nontrivial(ml)
    lat = ml.lattice
    return ml.memo("maximal", lambda: frozenset(
        m for m in range(lat.n)
        if m != lat.top and not any(lat.lt(m, x) for x in range(lat.n) if x != lat.top)
    ))


def _maximal_or_empty(ml: MultiplicativeLattice) -> ElementSet:
    if ml.lattice.bottom == ml.lattice.top:
        return frozenset()
    return maximal_elements(ml)


# ---- element predicates ---------------------------------------------------------

def is_prime(ml: MultiplicativeLattice, p: int) -> bool:
    lat, prod = ml.lattice, ml.product
    if p == lat.top:
        return False
    le = lat.leq
    return all(le[x][p] or le[y][p]
               for x in range(lat.n) for y in range(x, lat.n) if le[prod[x][y]][p])


def is_semiprime(ml: MultiplicativeLattice, q: int) -> bool:
    lat, prod = ml.lattice, ml.product
    if q == lat.top:
        return False
    return all(lat.leq[a][q] for a in range(lat.n) if lat.leq[prod[a][a]][q])


def is_primary(ml: MultiplicativeLattice, r: int) -> bool:
    lat, prod, le = ml.lattice, ml.product, ml.lattice.leq
    if r == lat.top:
        return False
    return all(le[x][r] or le[ml.stable_power(y)][r]
               for x in range(lat.n) for y in range(lat.n) if le[prod[x][y]][r])


def is_irreducible(ml: MultiplicativeLattice, s: int) -> bool:
    lat = ml.lattice
    if s == lat.top:
        return False
    meet = lat.meet_table
    return all(a == s or b == s
               for a in range(lat.n) for b in range(a, lat.n) if meet[a][b] == s)


def is_strongly_irreducible(ml: MultiplicativeLattice, s: int) -> bool:
    lat = ml.lattice
    if s == lat.top:
        return False
    le, meet = lat.leq, lat.meet_table
    return all(le[a][s] or le[b][s]
               for a in range(lat.n) for b in range(a, lat.n) if le[meet[a][b]][s])


def primes(ml: MultiplicativeLattice) -> ElementSet:
    return ml.memo("primes", lambda: frozenset(
        p for p in range(ml.lattice.n) if is_prime(ml, p)))


def closed_set_VP(ml: MultiplicativeLattice, a: int) -> ElementSet:
    """Primes above ``a``."""
    return frozenset(p for p in primes(ml) if ml.lattice.leq[a][p])


def minimal_primes_over(ml: MultiplicativeLattice, x: int) -> tuple[int, ...]:
    """Minimal primes above ``x``, sorted by element id."""
    return ml.lattice.minimal(closed_set_VP(ml, x))


# ---- radicals -------------------------------------------------------------------

def _radical_by_powers(ml: MultiplicativeLattice, x: int) -> int:
    lat = ml.lattice
    return lat.join_all(y for y in range(lat.n) if lat.leq[ml.stable_power(y)][x])


def _radical_by_primes(ml: MultiplicativeLattice, x: int) -> int:
    return ml.lattice.meet_all(closed_set_VP(ml, x))


def _radical_by_minimal_primes(ml: MultiplicativeLattice, x: int) -> int:
    return ml.lattice.meet_all(minimal_primes_over(ml, x))


def radical(ml: MultiplicativeLattice, x: int) -> int:
    """Radical of ``x``, computed three ways and cross-checked."""
    return ml.memo("radicals", lambda: _radical_table(ml))[x]


def _radical_table(ml: MultiplicativeLattice) -> tuple[int, ...]:
    out = []
    for x in range(ml.lattice.n):
        r1 = _radical_by_powers(ml, x)
        r2 = _radical_by_primes(ml, x)
        r3 = _radical_by_minimal_primes(ml, x)
        if not r1 == r2 == r3:
            lab = ml.lattice.labels
            raise RadicalFormulaMismatch(
                f"{ml.name}: radical of {lab[x]} by powers={lab[r1]}, "
                f"by primes={lab[r2]}, by minimal primes={lab[r3]}")
        out.append(r1)
    return tuple(out)


def jacobson_radical(ml: MultiplicativeLattice) -> int:
    return ml.lattice.meet_all(maximal_elements(ml))


# ---- records --------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationRecord:
    element: int
    proper: bool
    maximal: bool
    prime: bool
    semiprime: bool
    primary: bool
    irreducible: bool
    strongly_irreducible: bool
    complemented: bool
    radical_element: bool
    idempotent: bool
    radical: int

    FLAGS = ("proper", "maximal", "prime", "semiprime", "primary", "irreducible",
             "strongly_irreducible", "complemented", "radical_element", "idempotent")

    def flags(self) -> dict[str, bool]:
        d = asdict(self)
        return {k: d[k] for k in self.FLAGS}


def classify_element(ml: MultiplicativeLattice, x: int) -> ClassificationRecord:
    lat = ml.lattice
    x = lat.check_member(x)
    rad = radical(ml, x)
    return ClassificationRecord(
        element=x,
        proper=x != lat.top,
        maximal=x in _maximal_or_empty(ml),
        prime=x in primes(ml),
        semiprime=is_semiprime(ml, x),
        primary=is_primary(ml, x),
        irreducible=is_irreducible(ml, x),
        strongly_irreducible=is_strongly_irreducible(ml, x),
        complemented=bool(lat.complements_of(x)),
        radical_element=rad == x,
        idempotent=ml.product[x][x] == x,
        radical=rad,
    )


def classification_table(ml: MultiplicativeLattice) -> tuple[ClassificationRecord, ...]:
    return ml.memo("classification", lambda: tuple(
        classify_element(ml, x) for x in range(ml.lattice.n)))


@dataclass(frozen=True)
class LatticePredicates:
    semisimple: bool
    quasi_local: bool
    maximal_count: int
    regular: bool
    frame: bool
    top_compact: bool


def lattice_predicates(ml: MultiplicativeLattice) -> LatticePredicates:
    """Semisimple, regular and frame flags.

    Every finite lattice is quasi-local and has a compact top; both flags are
    reported anyway so hypotheses can be traced.
    """
    lat = ml.lattice
    maxima = _maximal_or_empty(ml)
    return LatticePredicates(
        semisimple=lat.meet_all(maxima) == lat.bottom,
        quasi_local=True,
        maximal_count=len(maxima),
        regular=all(lat.complements_of(x) for x in range(lat.n)),
        frame=ml.is_frame(),
        top_compact=True,
    )

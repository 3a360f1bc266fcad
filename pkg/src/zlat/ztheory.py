"""z-elements, the z-closure operator and the z-subclasses.

An element x is a z-element when, for all a and b with M_a ⊇ M_b (M_a being
the maximal elements above a) and b <= x, also a <= x.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

from .errors import DefinitionDisagreement, InternalDefect, NotZElement, QuotientLawViolation, TrivialLattice
from .lattice import ElementSet, FiniteLattice, validate_lattice
from .quantale import MultiplicativeLattice, MultTable, validate_quantale
from .spectra import (
    _maximal_or_empty,
    is_irreducible,
    is_primary,
    is_prime,
    is_semiprime,
    is_strongly_irreducible,
    maximal_elements,
    primes,
    closed_set_VP,
    radical,
)


def maximal_cover(ml: MultiplicativeLattice, a: int) -> tuple[ElementSet, int]:
    """(M_a, m_a): maximal elements above ``a`` and their meet."""
    return ml.memo("covers", lambda: _cover_table(ml))[a]


def _cover_table(ml: MultiplicativeLattice):
    lat = ml.lattice
    maxima = _maximal_or_empty(ml)
    out = []
    for a in range(lat.n):
        ma = frozenset(m for m in maxima if lat.leq[a][m])
        out.append((ma, lat.meet_all(ma)))
    return tuple(out)


def m_of(ml: MultiplicativeLattice, a: int) -> int:
    return maximal_cover(ml, a)[1]


# ---- the three definitions --------------------------------------------------------

def _z_by_pairs(ml: MultiplicativeLattice, x: int) -> bool:
    lat = ml.lattice
    sets = [maximal_cover(ml, a)[0] for a in range(lat.n)]
    below = [b for b in range(lat.n) if lat.leq[b][x]]
    for a in range(lat.n):
        if lat.leq[a][x]:
            continue
        if any(sets[a] >= sets[b] for b in below):
            return False
    return True


def _z_table(ml: MultiplicativeLattice) -> tuple[bool, ...]:
    lat = ml.lattice
    by_pairs = [_z_by_pairs(ml, x) for x in range(lat.n)]
    by_cover = [m_of(ml, x) == x for x in range(lat.n)]
    zset = [x for x in range(lat.n) if by_pairs[x]]
    by_closure = [lat.meet_all(z for z in zset if lat.leq[x][z]) == x for x in range(lat.n)]
    for x in range(lat.n):
        if not by_pairs[x] == by_cover[x] == by_closure[x]:
            raise DefinitionDisagreement(
                f"{ml.name}: z-element tests disagree on {lat.labels[x]}: "
                f"pairs={by_pairs[x]}, m_x=x: {by_cover[x]}, cz(x)=x: {by_closure[x]}")
    return tuple(by_pairs)


def z_definitions(ml: MultiplicativeLattice, x: int) -> tuple[bool, bool, bool]:
    """The three z-element tests evaluated independently, without cross-checking."""
    lat = ml.lattice
    zset = [y for y in range(lat.n) if _z_by_pairs(ml, y)]
    closure = lat.meet_all(z for z in zset if lat.leq[x][z])
    return _z_by_pairs(ml, x), m_of(ml, x) == x, closure == x


def is_z_element(ml: MultiplicativeLattice, x: int) -> bool:
    x = ml.lattice.check_member(x)
    return ml.memo("z_table", lambda: _z_table(ml))[x]


def z_elements(ml: MultiplicativeLattice) -> ElementSet:
    return ml.memo("z_elements", lambda: frozenset(
        x for x in range(ml.lattice.n) if is_z_element(ml, x)))


def z_closure(ml: MultiplicativeLattice, a: int) -> int:
    """Least z-element above ``a``."""
    return ml.memo("cz", lambda: _cz_table(ml))[a]


def _cz_table(ml: MultiplicativeLattice) -> tuple[int, ...]:
    lat = ml.lattice
    zs = z_elements(ml)
    return tuple(lat.meet_all(z for z in zs if lat.leq[a][z]) for a in range(lat.n))


# ---- z-subclasses ----------------------------------------------------------------

def _zs(ml):
    return sorted(z_elements(ml))


def is_z_prime(ml: MultiplicativeLattice, p: int) -> bool:
    lat, prod, le = ml.lattice, ml.product, ml.lattice.leq
    if p == lat.top or not is_z_element(ml, p):
        return False
    zs = _zs(ml)
    return all(le[a][p] or le[b][p] for a in zs for b in zs if le[prod[a][b]][p])


def is_z_semiprime(ml: MultiplicativeLattice, q: int) -> bool:
    lat, prod, le = ml.lattice, ml.product, ml.lattice.leq
    if q == lat.top or not is_z_element(ml, q):
        return False
    return all(le[a][q] for a in _zs(ml) if le[prod[a][a]][q])


def is_z_primary(ml: MultiplicativeLattice, r: int) -> bool:
    lat, prod, le = ml.lattice, ml.product, ml.lattice.leq
    if r == lat.top or not is_z_element(ml, r):
        return False
    zs = _zs(ml)
    return all(le[a][r] or le[ml.stable_power(b)][r]
               for a in zs for b in zs if le[prod[a][b]][r])


def is_z_irreducible(ml: MultiplicativeLattice, s: int) -> bool:
    lat = ml.lattice
    if s == lat.top or not is_z_element(ml, s):
        return False
    zs = _zs(ml)
    return all(a == s or b == s for a in zs for b in zs if lat.meet_table[a][b] == s)


def is_z_strongly_irreducible(ml: MultiplicativeLattice, s: int) -> bool:
    lat, le = ml.lattice, ml.lattice.leq
    if s == lat.top or not is_z_element(ml, s):
        return False
    zs = _zs(ml)
    return all(le[a][s] or le[b][s] for a in zs for b in zs if le[lat.meet_table[a][b]][s])


def is_strong_z(ml: MultiplicativeLattice, x: int) -> bool:
    # x is a meet of some set S of maximal elements iff x = m_x, since
    # S ⊆ M_x and x <= m_x <= meet(S)
    return m_of(ml, x) == x


def basic_z_elements(ml: MultiplicativeLattice) -> ElementSet:
    return frozenset(m_of(ml, a) for a in range(ml.lattice.n))


@dataclass(frozen=True)
class ZProfile:
    element: int
    M_a: ElementSet
    m_a: int
    cz: int
    is_z: bool
    z_prime: bool
    z_semiprime: bool
    z_primary: bool
    z_irreducible: bool
    z_strongly_irreducible: bool
    strong_z: bool
    basic_z: bool

    FLAGS = ("is_z", "z_prime", "z_semiprime", "z_primary", "z_irreducible",
             "z_strongly_irreducible", "strong_z", "basic_z")

    def flags(self) -> dict[str, bool]:
        d = asdict(self)
        return {k: d[k] for k in self.FLAGS}


def z_classify(ml: MultiplicativeLattice, x: int) -> ZProfile:
    x = ml.lattice.check_member(x)
    Ma, ma = maximal_cover(ml, x)
    return ZProfile(
        element=x,
        M_a=Ma,
        m_a=ma,
        cz=z_closure(ml, x),
        is_z=is_z_element(ml, x),
        z_prime=is_z_prime(ml, x),
        z_semiprime=is_z_semiprime(ml, x),
        z_primary=is_z_primary(ml, x),
        z_irreducible=is_z_irreducible(ml, x),
        z_strongly_irreducible=is_z_strongly_irreducible(ml, x),
        strong_z=is_strong_z(ml, x),
        basic_z=x in basic_z_elements(ml),
    )


def z_profiles(ml: MultiplicativeLattice) -> tuple[ZProfile, ...]:
    return ml.memo("z_profiles", lambda: tuple(z_classify(ml, x) for x in range(ml.lattice.n)))


# ---- lattice-level predicates ------------------------------------------------------

@dataclass(frozen=True)
class ZPredicates:
    szi: bool
    pz: bool
    z_join_closed: bool
    z_product_closed: bool


def is_szi(ml: MultiplicativeLattice) -> bool:
    """Every basic z-element m_a is idempotent."""
    prod = ml.product
    return all(prod[m][m] == m for m in basic_z_elements(ml))


def is_pz(ml: MultiplicativeLattice) -> bool:
    return primes(ml) <= z_elements(ml)


def z_join_closed(ml: MultiplicativeLattice) -> bool:
    zs = z_elements(ml)
    return all(ml.lattice.join_table[a][b] in zs for a in zs for b in zs)


def z_product_closed(ml: MultiplicativeLattice) -> bool:
    zs = z_elements(ml)
    return all(ml.product[a][b] in zs for a in zs for b in zs)


def lattice_z_predicates(ml: MultiplicativeLattice) -> ZPredicates:
    return ZPredicates(
        szi=is_szi(ml),
        pz=is_pz(ml),
        z_join_closed=z_join_closed(ml),
        z_product_closed=z_product_closed(ml),
    )


# ---- minimal z-primes and decompositions -----------------------------------------

def z_primes(ml: MultiplicativeLattice) -> ElementSet:
    return ml.memo("z_primes", lambda: frozenset(
        p for p in range(ml.lattice.n) if is_z_prime(ml, p)))


def minimal_z_primes(ml: MultiplicativeLattice) -> tuple[int, ...]:
    if ml.lattice.bottom == ml.lattice.top:
        raise TrivialLattice(f"{ml.name} is the one-point lattice (0 = 1)")
    return ml.lattice.minimal(z_primes(ml))


def closed_set_Vz(ml: MultiplicativeLattice, p: int) -> ElementSet:
    """z-primes above ``p``."""
    return frozenset(q for q in z_primes(ml) if ml.lattice.leq[p][q])


def z_irreducible_decomposition(ml: MultiplicativeLattice, x: int) -> tuple[int, ...]:
    """Smallest set of z-irreducible elements meeting to ``x``.

    Among minimum-size decompositions the lexicographically first (by element
    id) is returned; minimum size makes it irredundant. ``1`` decomposes as
    the empty meet.
    """
    lat = ml.lattice
    x = lat.check_member(x)
    if not is_z_element(ml, x):
        raise NotZElement(f"{lat.labels[x]} is not a z-element of {ml.name}")
    candidates = sorted(s for s in z_elements(ml) if is_z_irreducible(ml, s) and lat.leq[x][s])
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            if lat.meet_all(combo) == x:
                return combo
    raise InternalDefect(
        f"{ml.name}: no z-irreducible decomposition of {lat.labels[x]}")


# ---- quotient frame ------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientFrame:
    """Z(L) with product cz(ab) and join cz(a v b).

    ``carrier`` lists the z-elements in increasing id order; the tables are
    indexed by positions in ``carrier`` and hold L-element ids.
    """

    source: MultiplicativeLattice
    carrier: tuple[int, ...]
    odot: tuple[tuple[int, ...], ...]
    vee: tuple[tuple[int, ...], ...]
    wedge: tuple[tuple[int, ...], ...]
    projection: tuple[int, ...]

    def position(self, x: int) -> int:
        return self.carrier.index(x)

    def as_lattice(self) -> FiniteLattice:
        lat = self.source.lattice
        rel = [[lat.leq[a][b] for b in self.carrier] for a in self.carrier]
        return validate_lattice(rel, [lat.labels[a] for a in self.carrier])

    def as_multiplicative_lattice(self) -> MultiplicativeLattice:
        """The carrier as a structure in its own right, product = ⊙."""
        qlat = self.as_lattice()
        pos = {a: i for i, a in enumerate(self.carrier)}
        table = [[pos[v] for v in row] for row in self.odot]
        return validate_quantale(qlat, MultTable.from_rows(table), f"Z({self.source.name})")


def quotient_violation(ml: MultiplicativeLattice):
    """First violated quotient-frame law as a tagged element tuple, or None."""
    lat, prod = ml.lattice, ml.product
    cz = [z_closure(ml, a) for a in range(lat.n)]
    zs = z_elements(ml)
    carrier = sorted(zs)
    for a in carrier:
        for b in carrier:
            if cz[prod[a][b]] != lat.meet_table[a][b]:
                return ("odot=meet", a, b)
            if lat.meet_table[a][b] not in zs:
                return ("meet-closed", a, b)
    if set(cz) != zs:
        missing = sorted(zs - set(cz))
        return ("surjective", missing[0] if missing else lat.top)
    for a in range(lat.n):
        for b in range(lat.n):
            if lat.leq[a][b] and not lat.leq[cz[a]][cz[b]]:
                return ("monotone", a, b)
            if cz[lat.meet_table[a][b]] != lat.meet_table[cz[a]][cz[b]]:
                return ("meets", a, b)
            if cz[lat.join_table[a][b]] != cz[lat.join_table[cz[a]][cz[b]]]:
                return ("joins", a, b)
    if is_szi(ml):
        for a in range(lat.n):
            for b in range(lat.n):
                v = cz[prod[a][b]]
                if not (v == cz[prod[a][cz[b]]] == cz[prod[cz[a]][b]] == cz[prod[cz[a]][cz[b]]]):
                    return ("nucleus", a, b)
    return None


def z_quotient(ml: MultiplicativeLattice) -> QuotientFrame:
    """Build Z(L) and assert the frame and projection laws."""
    bad = quotient_violation(ml)
    if bad is not None:
        names = [ml.lattice.labels[v] if isinstance(v, int) else v for v in bad]
        raise QuotientLawViolation(f"{ml.name}: quotient law violated: {names}")
    lat, prod = ml.lattice, ml.product
    carrier = tuple(sorted(z_elements(ml)))
    cz = tuple(z_closure(ml, a) for a in range(lat.n))
    odot = tuple(tuple(cz[prod[a][b]] for b in carrier) for a in carrier)
    vee = tuple(tuple(cz[lat.join_table[a][b]] for b in carrier) for a in carrier)
    wedge = tuple(tuple(lat.meet_table[a][b] for b in carrier) for a in carrier)
    qf = QuotientFrame(ml, carrier, odot, vee, wedge, cz)
    # the carrier must itself be a frame: this validates distributivity
    qf.as_multiplicative_lattice()
    return qf


__all__ = [
    "maximal_cover", "m_of", "is_z_element", "z_definitions", "z_elements", "z_closure",
    "is_z_prime", "is_z_semiprime", "is_z_primary", "is_z_irreducible",
    "is_z_strongly_irreducible", "is_strong_z", "basic_z_elements", "ZProfile", "z_classify",
    "z_profiles", "ZPredicates", "is_szi", "is_pz", "z_join_closed", "z_product_closed",
    "lattice_z_predicates", "z_primes", "minimal_z_primes", "closed_set_Vz",
    "z_irreducible_decomposition", "QuotientFrame", "quotient_violation", "z_quotient",
    # re-exported for convenience
    "maximal_elements", "primes", "closed_set_VP", "radical", "is_prime", "is_semiprime",
    "is_primary", "is_irreducible", "is_strongly_irreducible",
]

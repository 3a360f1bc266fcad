"""Executable catalogue of results about z-elements.

Each :class:`Theorem` enumerates *cases* (tagged element tuples) and a
``holds`` predicate that re-evaluates a single case from the defining
formulas, so every failing witness can be rechecked on its own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .. import spectra as sp
from .. import ztheory as zt
from ..errors import LatticeError, QuantaleError, UnknownTheoremId
from ..lattice import is_lattice_hom, validate_lattice
from ..quantale import MultiplicativeLattice, frame_of

Case = tuple


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    structure: str
    verdict: Verdict
    witness: Case | None = None
    witness_labels: tuple | None = None
    cases_checked: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "structure": self.structure,
            "verdict": self.verdict.value,
            "witness": list(self.witness_labels) if self.witness_labels is not None else None,
            "cases_checked": self.cases_checked,
            "note": self.note,
        }


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    cases: Callable[[MultiplicativeLattice], Iterable[Case]]
    holds: Callable[[MultiplicativeLattice, Case], bool]
    hypothesis: Callable[[MultiplicativeLattice], bool] | None = None
    hypothesis_name: str = ""
    results: tuple[str, ...] = field(default_factory=tuple)


# ---- small helpers -----------------------------------------------------------------

def _els(ml):
    return range(ml.lattice.n)


def _pairs(ml):
    n = ml.lattice.n
    return ((a, b) for a in range(n) for b in range(n))


def _Z(ml):
    return sorted(zt.z_elements(ml))


def _M(ml):
    return sp._maximal_or_empty(ml)


def _cz(ml, a):
    # straight from the definition: meet of the z-elements above a
    lat = ml.lattice
    return lat.meet_all(z for z in zt.z_elements(ml) if lat.leq[a][z])


def _is_z(ml, x):
    return zt._z_by_pairs(ml, x)


def _semisimple(ml):
    return sp.lattice_predicates(ml).semisimple


def _nontrivial(ml):
    return ml.lattice.bottom != ml.lattice.top


def _label(ml, case: Case):
    out = []
    for v in case:
        if isinstance(v, bool) or isinstance(v, str):
            out.append(v)
        elif isinstance(v, int):
            out.append(ml.lattice.labels[v])
        elif isinstance(v, tuple):
            out.append(tuple(ml.lattice.labels[u] for u in v))
        else:
            out.append(v)
    return tuple(out)


# ---- MULT-BASICS -------------------------------------------------------------------

def _mult_cases(ml):
    lat = ml.lattice
    for x in _els(ml):
        yield ("x0=0", x)
        for y in _els(ml):
            yield ("xy<=x", x, y)
            yield ("xy<=x^y", x, y)
            if lat.leq[x][y]:
                for z in _els(ml):
                    yield ("monotone", x, y, z)
                for u, v in _pairs(ml):
                    if lat.leq[u][v]:
                        yield ("monotone2", x, y, u, v)


def _mult_holds(ml, c):
    lat, p = ml.lattice, ml.product
    tag = c[0]
    if tag == "x0=0":
        return p[c[1]][lat.bottom] == lat.bottom
    x, y = c[1], c[2]
    if tag == "xy<=x":
        return lat.leq[p[x][y]][x]
    if tag == "xy<=x^y":
        return lat.leq[p[x][y]][lat.meet_table[x][y]]
    if tag == "monotone":
        return lat.leq[p[x][c[3]]][p[y][c[3]]]
    return lat.leq[p[x][c[3]]][p[y][c[4]]]


# ---- MAX-PRIME ----------------------------------------------------------------------

def _maxprime_cases(ml):
    M = _M(ml)
    for m in sorted(M):
        yield ("maximal-is-prime", m)
        for a in _els(ml):
            yield ("a<=m iff a^2<=m", a, m)
    for a in _els(ml):
        if a != ml.lattice.top:
            yield ("below-a-maximal", a)


def _maxprime_holds(ml, c):
    lat, p = ml.lattice, ml.product
    if c[0] == "maximal-is-prime":
        return sp.is_prime(ml, c[1])
    if c[0] == "a<=m iff a^2<=m":
        a, m = c[1], c[2]
        return lat.leq[a][m] == lat.leq[p[a][a]][m]
    return any(lat.leq[c[1]][m] for m in _M(ml))


# ---- Z-MEETS and Z-BASICS --------------------------------------------------------------

def _zmeets_cases(ml):
    Z = _Z(ml)
    for k in range(len(Z) + 1):
        for S in combinations(Z, k):
            yield ("meet",) + S


def _zmeets_holds(ml, c):
    return _is_z(ml, ml.lattice.meet_all(c[1:]))


def _zbasics_cases(ml):
    lat = ml.lattice
    M = _M(ml)
    for x in _els(ml):
        yield ("definitions-agree", x)
    for m in sorted(M):
        yield ("maximal-is-z", m)
    yield ("top-is-z",)
    if _nontrivial(ml):
        yield ("jacobson-is-z",)
    yield ("semisimple-zero-is-z",)
    if len(M) == 1:
        (m,) = M
        for a in _els(ml):
            if lat.lt(a, m):
                yield ("unique-maximal-kills-below", a)
    for x in _Z(ml):
        for p in sp.minimal_primes_over(ml, x):
            yield ("minimal-prime-lifts", x, p)


def _zbasics_holds(ml, c):
    lat = ml.lattice
    tag = c[0]
    if tag == "definitions-agree":
        return len(set(zt.z_definitions(ml, c[1]))) == 1
    if tag in ("maximal-is-z", "minimal-prime-lifts"):
        return _is_z(ml, c[-1])
    if tag == "top-is-z":
        return _is_z(ml, lat.top)
    if tag == "jacobson-is-z":
        return _is_z(ml, sp.jacobson_radical(ml))
    if tag == "semisimple-zero-is-z":
        return not _semisimple(ml) or _is_z(ml, lat.bottom)
    if tag == "unique-maximal-kills-below":
        return not _is_z(ml, c[1])
    raise ValueError(tag)


# ---- residuals ---------------------------------------------------------------------------

def _residual_cases(ml):
    Z = _Z(ml)
    n = ml.lattice.n
    for a, b in _pairs(ml):
        for l in range(n):
            yield ("galois", a, b, l)
    for a in Z:
        for b in range(n):
            yield ("residual-is-z", a, b)
            for c in range(n):
                yield ("iterated", a, b, c)
        for b1, b2 in combinations(range(n), 2):
            yield ("join-of-divisors", a, b1, b2)
    for a1, a2 in combinations(Z, 2):
        for b in range(n):
            yield ("meet-of-numerators", a1, a2, b)


def _residual_holds(ml, c):
    lat, p = ml.lattice, ml.product
    res = ml.residual
    tag = c[0]
    if tag == "galois":
        a, b, l = c[1:]
        return lat.leq[l][res(a, b)] == lat.leq[p[l][b]][a]
    if tag == "residual-is-z":
        return _is_z(ml, res(c[1], c[2]))
    if tag == "iterated":
        a, b, cc = c[1:]
        v1, v2, v3 = res(res(a, b), cc), res(a, p[b][cc]), res(res(a, cc), b)
        return v1 == v2 == v3 and _is_z(ml, v1)
    if tag == "join-of-divisors":
        a, b1, b2 = c[1:]
        v = res(a, lat.join_table[b1][b2])
        w = lat.meet_table[res(a, b1)][res(a, b2)]
        return v == w and _is_z(ml, v)
    a1, a2, b = c[1:]
    return _is_z(ml, res(lat.meet_table[a1][a2], b)) and \
        _is_z(ml, lat.meet_table[res(a1, b)][res(a2, b)])


def _annihilator_holds(ml, c):
    return _is_z(ml, ml.annihilator(c[1]))


# ---- QUASILOCAL-PZ and SEMISIMPLE-DICHOTOMY ----------------------------------------------------

def _prime_cases(ml):
    return (("prime", p) for p in sorted(sp.primes(ml)))


def _quasilocal_holds(ml, c):
    return c[1] in _M(ml)


def _dichotomy_holds(ml, c):
    lat = ml.lattice
    p = c[1]
    if _is_z(ml, p):
        return True
    below = [x for x in _Z(ml) if lat.leq[x][p]]
    tops = lat.maximal(below)
    return bool(tops) and all(sp.is_prime(ml, x) for x in tops)


# ---- Z-PRODUCT-SZI --------------------------------------------------------------------------

def _product_cases(ml):
    yield ("szi-iff-product-closed",)
    Z = _Z(ml)
    if zt.is_szi(ml):
        for a in Z:
            for b in Z:
                yield ("product-is-z", a, b)
    else:
        for a in _els(ml):
            yield ("non-idempotent-basic-square-not-z", a)


def _product_holds(ml, c):
    p = ml.product
    tag = c[0]
    if tag == "szi-iff-product-closed":
        Z = _Z(ml)
        closed = all(_is_z(ml, p[a][b]) for a in Z for b in Z)
        szi = all(p[m][m] == m for m in {zt.m_of(ml, a) for a in _els(ml)})
        return closed == szi
    if tag == "product-is-z":
        return _is_z(ml, p[c[1]][c[2]])
    m = zt.m_of(ml, c[1])
    return p[m][m] == m or not _is_z(ml, p[m][m])


# ---- homomorphisms ------------------------------------------------------------------------------

def endomorphisms(ml: MultiplicativeLattice) -> tuple[tuple[int, ...], ...]:
    """Every map L -> L preserving binary joins and meets (hence order)."""
    def compute():
        lat = ml.lattice
        return tuple(f for f in product(range(lat.n), repeat=lat.n) if is_lattice_hom(lat, lat, f))
    return ml.memo("endomorphisms", compute)


def _preimage(f, y):
    return {x for x, fx in enumerate(f) if fx == y}


def _all_z(ml, xs):
    return all(_is_z(ml, x) for x in xs)


def _hom_inv_cases(ml):
    return (("all-j", f) for f in endomorphisms(ml))


def _hom_inv_fixed_cases(ml):
    return (("fixed-j", f, j) for f in endomorphisms(ml) for j in _Z(ml))


def hom_inverse_sides(ml: MultiplicativeLattice, target: MultiplicativeLattice,
                      f: Sequence[int], j: int | None = None,
                      preimage: Callable | None = None) -> tuple[bool, bool]:
    """(left, right) sides of the inverse-image equivalence for ``f: ml -> target``.

    Left: preimages of every z-element of the target (or of ``j`` alone) are
    z-elements. Right: preimages of every maximal element of the target are.
    """
    pre = preimage or _preimage
    zs = [j] if j is not None else sorted(zt.z_elements(target))
    left = all(_all_z(ml, pre(f, y)) for y in zs)
    right = all(_all_z(ml, pre(f, m)) for m in sp._maximal_or_empty(target))
    return left, right


def _hom_inv_holds(ml, c):
    j = c[2] if c[0] == "fixed-j" else None
    left, right = hom_inverse_sides(ml, ml, c[1], j)
    return left == right


def _kernel_families(ml):
    n = ml.lattice.n
    fams = [(a,) for a in range(n)] + list(combinations(range(n), 2)) + [tuple(range(n))]
    return [F for F in fams if ml.lattice.meet_all(F) == ml.lattice.bottom]


def _hom_kernel_cases(ml):
    fams = _kernel_families(ml)
    return (("family", f, F) for f in endomorphisms(ml) for F in fams)


def hom_kernel_holds(ml, target, f, family, preimage=None) -> bool:
    pre = preimage or _preimage
    if target.lattice.meet_all(family) != target.lattice.bottom:
        return True
    if not all(_all_z(ml, pre(f, a)) for a in family):
        return True
    return _all_z(ml, pre(f, target.lattice.bottom))


def _hom_kernel_holds(ml, c):
    return hom_kernel_holds(ml, ml, c[1], c[2])


def _down_preimage_for(ml):
    le = ml.lattice.leq
    return lambda f, y: {x for x, fx in enumerate(f) if le[fx][y]}


def strict_endomorphisms(ml):
    lat, p = ml.lattice, ml.product
    return tuple(f for f in endomorphisms(ml)
                 if f[lat.bottom] == lat.bottom and f[lat.top] == lat.top
                 and all(f[p[a][b]] == p[f[a]][f[b]] for a in range(lat.n) for b in range(a, lat.n)))


def _hom_inv_ideal_cases(ml):
    return (("ideal-reading", f) for f in strict_endomorphisms(ml))


def _hom_inv_ideal_holds(ml, c):
    left, right = hom_inverse_sides(ml, ml, c[1], None, _down_preimage_for(ml))
    return left == right


def _hom_kernel_ideal_cases(ml):
    fams = _kernel_families(ml)
    return (("ideal-reading", f, F) for f in strict_endomorphisms(ml) for F in fams)


def _hom_kernel_ideal_holds(ml, c):
    return hom_kernel_holds(ml, ml, c[1], c[2], _down_preimage_for(ml))


# ---- regular ------------------------------------------------------------------------------------

def _regular_holds(ml, c):
    return zt.is_strong_z(ml, c[1]) and _is_z(ml, c[1])


# ---- CZ-LAWS --------------------------------------------------------------------------------------

def _cz_cases(ml):
    n = ml.lattice.n
    for a in range(n):
        for tag in ("extensive", "idempotent", "top-iff", "fixed-iff-z", "least-z-above",
                    "radical-below", "radical-commutes", "below-m"):
            yield (tag, a)
        for k in range(1, ml.power_cap + 1):
            yield ("powers", a, k)
    yield ("semisimple-zero",)
    for a, b in _pairs(ml):
        yield ("monotone", a, b)
        yield ("product-meet", a, b)
        yield ("join", a, b)


def _cz_holds(ml, c):
    lat, p = ml.lattice, ml.product
    cz = lambda a: _cz(ml, a)
    rad = lambda a: sp.radical(ml, a)
    tag = c[0]
    if tag == "semisimple-zero":
        return not _semisimple(ml) or cz(lat.bottom) == lat.bottom
    a = c[1]
    if tag == "extensive":
        return lat.leq[a][cz(a)]
    if tag == "idempotent":
        return cz(cz(a)) == cz(a)
    if tag == "top-iff":
        return (cz(a) == lat.top) == (a == lat.top)
    if tag == "fixed-iff-z":
        return (cz(a) == a) == _is_z(ml, a)
    if tag == "least-z-above":
        return _is_z(ml, cz(a)) and all(lat.leq[cz(a)][z] for z in _Z(ml) if lat.leq[a][z])
    if tag == "radical-below":
        return lat.leq[rad(a)][cz(a)]
    if tag == "radical-commutes":
        return rad(cz(a)) == cz(rad(a))
    if tag == "below-m":
        m = zt.m_of(ml, a)
        return lat.leq[cz(a)][m] and (not _is_z(ml, a) or cz(a) == m)
    if tag == "powers":
        return cz(ml.power(a, c[2])) == cz(a)
    b = c[2]
    if tag == "monotone":
        return not lat.leq[a][b] or lat.leq[cz(a)][cz(b)]
    if tag == "product-meet":
        return cz(p[a][b]) == cz(lat.meet_table[a][b]) == lat.meet_table[cz(a)][cz(b)]
    if tag == "join":
        j = cz(lat.join_table[a][b])
        return lat.leq[lat.join_table[cz(a)][cz(b)]][j] and j == cz(lat.join_table[cz(a)][cz(b)])
    raise ValueError(tag)


# ---- CZ-JOIN-EQ -------------------------------------------------------------------------------------

def _subsets(xs):
    # non-empty only: the empty join would force 0 into Z(L)
    xs = list(xs)
    for k in range(1, len(xs) + 1):
        yield from combinations(xs, k)


def join_closure_conditions(ml) -> tuple[bool, bool, bool, bool]:
    """Binary join-closure of Z(L), binary join law for cz, and their forms for
    arbitrary non-empty families."""
    lat = ml.lattice
    Z = _Z(ml)
    cz = lambda a: _cz(ml, a)
    c1 = all(_is_z(ml, lat.join_table[a][b]) for a in Z for b in Z)
    c2 = all(cz(lat.join_table[a][b]) == lat.join_table[cz(a)][cz(b)] for a, b in _pairs(ml))
    c3 = all(_is_z(ml, lat.join_all(S)) for S in _subsets(Z))
    c4 = all(cz(lat.join_all(S)) == lat.join_all(cz(a) for a in S) for S in _subsets(_els(ml)))
    return c1, c2, c3, c4


def _join_eq_holds(ml, c):
    return len(set(join_closure_conditions(ml))) == 1


# ---- PZ-CHAR ------------------------------------------------------------------------------------------

def pz_conditions(ml) -> tuple[bool, bool, bool, bool]:
    """pz; semiprime implies z; m_a = meet of primes above a; cz = radical."""
    lat = ml.lattice
    P = sp.primes(ml)
    c1 = all(_is_z(ml, p) for p in P)
    c2 = all(_is_z(ml, q) for q in _els(ml) if sp.is_semiprime(ml, q))
    c3 = all(zt.m_of(ml, a) == lat.meet_all(p for p in P if lat.leq[a][p]) for a in _els(ml))
    c4 = all(_cz(ml, a) == sp.radical(ml, a) for a in _els(ml))
    return c1, c2, c3, c4


def _pz_holds(ml, c):
    return len(set(pz_conditions(ml))) == 1


# ---- NUCLEUS-SZI and QUOTIENT-FRAME ------------------------------------------------------------------

def _nucleus_cases(ml):
    for a, b in _pairs(ml):
        yield ("nucleus-chain", a, b)
        yield ("product-law", a, b)


def _nucleus_holds(ml, c):
    p = ml.product
    cz = lambda a: _cz(ml, a)
    a, b = c[1], c[2]
    if c[0] == "product-law":
        return cz(p[a][b]) == p[cz(a)][cz(b)]
    return cz(p[a][b]) == cz(p[a][cz(b)]) == cz(p[cz(a)][b]) == cz(p[cz(a)][cz(b)])


def _quotient_cases(ml):
    Z = _Z(ml)
    for a in Z:
        for b in Z:
            yield ("odot-is-meet", a, b)
            yield ("carrier-meet-closed", a, b)
    yield ("projection-onto",)
    yield ("carrier-is-frame",)
    for a, b in _pairs(ml):
        yield ("projection-order", a, b)
        yield ("projection-meets", a, b)
        yield ("projection-joins", a, b)


def _quotient_holds(ml, c):
    lat, p = ml.lattice, ml.product
    cz = lambda a: _cz(ml, a)
    tag = c[0]
    if tag == "projection-onto":
        return {cz(a) for a in _els(ml)} == set(_Z(ml))
    if tag == "carrier-is-frame":
        Z = _Z(ml)
        rel = [[lat.leq[a][b] for b in Z] for a in Z]
        try:
            frame_of(validate_lattice(rel))
        except (LatticeError, QuantaleError):
            return False
        return True
    a, b = c[1], c[2]
    if tag == "odot-is-meet":
        return cz(p[a][b]) == lat.meet_table[a][b]
    if tag == "carrier-meet-closed":
        return _is_z(ml, lat.meet_table[a][b])
    if tag == "projection-order":
        return not lat.leq[a][b] or lat.leq[cz(a)][cz(b)]
    if tag == "projection-meets":
        return cz(lat.meet_table[a][b]) == lat.meet_table[cz(a)][cz(b)]
    return cz(lat.join_table[a][b]) == cz(lat.join_table[cz(a)][cz(b)])


# ---- irreducible and prime-type equivalences ------------------------------------------------------

def _per_element(tag):
    return lambda ml: ((tag, x) for x in _els(ml))


def _eq_irr_cases(ml):
    for x in _els(ml):
        yield ("z-strongly-irreducible", x)
        yield ("z-irreducible", x)
        yield ("prime=>strongly-irreducible", x)
        yield ("z-si=>z-irreducible", x)


def _eq_irr_holds(ml, c):
    x = c[1]
    tag = c[0]
    if tag == "z-strongly-irreducible":
        return zt.is_z_strongly_irreducible(ml, x) == (_is_z(ml, x) and sp.is_strongly_irreducible(ml, x))
    if tag == "z-irreducible":
        return zt.is_z_irreducible(ml, x) == (_is_z(ml, x) and sp.is_irreducible(ml, x))
    if tag == "prime=>strongly-irreducible":
        return not sp.is_prime(ml, x) or sp.is_strongly_irreducible(ml, x)
    return not zt.is_z_strongly_irreducible(ml, x) or zt.is_z_irreducible(ml, x)


def _eq_prime_holds(ml, c):
    x = c[1]
    return zt.is_z_prime(ml, x) == (_is_z(ml, x) and sp.is_prime(ml, x))


def _eq_semiprime_holds(ml, c):
    x = c[1]
    return zt.is_z_semiprime(ml, x) == (_is_z(ml, x) and sp.is_semiprime(ml, x))


def _eq_primary_holds(ml, c):
    x = c[1]
    return zt.is_z_primary(ml, x) == (_is_z(ml, x) and sp.is_primary(ml, x))


def _vpss_cases(ml):
    return (("z-element", x) for x in _Z(ml))


def _vpss_holds(ml, c):
    x = c[1]
    return zt.is_z_prime(ml, x) == (zt.is_z_semiprime(ml, x) and zt.is_z_strongly_irreducible(ml, x))


# ---- decomposition, minimal z-primes, chains ------------------------------------------------------

def _decomp_cases(ml):
    return (("z-element", x) for x in _Z(ml))


def _decomp_holds(ml, c):
    x = c[1]
    parts = zt.z_irreducible_decomposition(ml, x)
    lat = ml.lattice
    if lat.meet_all(parts) != x or not all(zt.is_z_irreducible(ml, s) for s in parts):
        return False
    # irredundant
    return all(lat.meet_all(parts[:i] + parts[i + 1:]) != x for i in range(len(parts)))


def _minzprime_cases(ml):
    yield ("nonempty",)
    for m in sorted(_M(ml)):
        yield ("maximal-is-z-prime", m)
    for p in sorted(zt.z_primes(ml)):
        yield ("above-a-minimal-z-prime", p)
        yield ("closed-set", p)


def _minzprime_holds(ml, c):
    lat = ml.lattice
    tag = c[0]
    mins = zt.minimal_z_primes(ml)
    if tag == "nonempty":
        return len(mins) > 0
    if tag == "maximal-is-z-prime":
        return zt.is_z_prime(ml, c[1])
    if tag == "above-a-minimal-z-prime":
        return any(lat.leq[q][c[1]] for q in mins)
    p = c[1]
    Vz = zt.closed_set_Vz(ml, p)
    return p in Vz and all(zt.is_z_prime(ml, q) and lat.leq[p][q] for q in Vz)


def _min_si_cases(ml):
    return (("proper-z", a) for a in _Z(ml) if a != ml.lattice.top)


def _min_si_holds(ml, c):
    lat = ml.lattice
    a = c[1]
    above = [s for s in _els(ml) if lat.leq[a][s] and zt.is_z_strongly_irreducible(ml, s)]
    return bool(lat.minimal(above))


def _all_proper_z_si(ml):
    return all(zt.is_z_strongly_irreducible(ml, x) for x in _Z(ml) if x != ml.lattice.top)


def _chain_cases(ml):
    return (("comparable", a, b) for a, b in combinations(_Z(ml), 2))


def _chain_holds(ml, c):
    lat = ml.lattice
    return lat.leq[c[1]][c[2]] or lat.leq[c[2]][c[1]]


# ---- the catalogue ----------------------------------------------------------------------------

_SZI = dict(hypothesis=zt.is_szi, hypothesis_name="szi")

CATALOG: dict[str, Theorem] = {t.id: t for t in [
    Theorem("MULT-BASICS", "xy <= x, xy <= x^y, x0 = 0, and products are monotone in each argument",
            _mult_cases, _mult_holds, results=("multiplication basics",)),
    Theorem("MAX-PRIME", "maximal elements are prime, so a <= m iff a^2 <= m; "
            "every proper element lies below a maximal element",
            _maxprime_cases, _maxprime_holds,
            results=("maximal elements are prime", "existence of maximal elements")),
    Theorem("Z-MEETS", "any meet of z-elements (including the empty meet) is a z-element",
            _zmeets_cases, _zmeets_holds, results=("z-elements closed under meets",)),
    Theorem("Z-BASICS", "the three z-element tests agree; maximal elements, 1 and the Jacobson "
            "radical are z-elements; a unique maximal m has no z-elements strictly below it; "
            "minimal primes over a z-element are z-elements; j = 0 implies 0 is a z-element",
            _zbasics_cases, _zbasics_holds,
            results=("z-element characterisation by m_x", "maximal elements are z-elements",
                     "Jacobson radical is a z-element", "unique maximal element",
                     "minimal primes over z-elements", "zero is a z-element when semisimple")),
    Theorem("Z-RESIDUAL", "residuals of z-elements are z-elements, including iterated, meet and "
            "join forms; residuation is adjoint to multiplication",
            _residual_cases, _residual_holds, results=("residuals of z-elements",
                                                       "iterated residuals of z-elements")),
    Theorem("Z-ANNIHILATOR", "in a semisimple lattice every annihilator is a z-element",
            lambda ml: (("annihilator", b) for b in _els(ml)), _annihilator_holds,
            hypothesis=_semisimple, hypothesis_name="semisimple",
            results=("annihilators in semisimple lattices",)),
    Theorem("QUASILOCAL-PZ", "in a quasi-local pz lattice every prime is maximal",
            _prime_cases, _quasilocal_holds, hypothesis=zt.is_pz, hypothesis_name="quasi-local and pz",
            results=("quasi-local pz lattices",)),
    Theorem("SEMISIMPLE-DICHOTOMY", "in a semisimple lattice a prime is a z-element or the maximal "
            "z-elements below it are prime", _prime_cases, _dichotomy_holds,
            hypothesis=_semisimple, hypothesis_name="semisimple",
            results=("semisimple prime/z dichotomy",)),
    Theorem("Z-PRODUCT-SZI", "z-elements are closed under products iff every basic z-element is "
            "idempotent", _product_cases, _product_holds,
            results=("product closure characterisation",)),
    Theorem("HOM-INV", "for a lattice homomorphism f, the preimage of every z-element consists of "
            "z-elements iff the preimage of every maximal element does (preimages as sets, "
            "quantified over all z-elements j; checked over all endomorphisms)",
            _hom_inv_cases, _hom_inv_holds, results=("inverse images under homomorphisms",)),
    Theorem("HOM-INV-FIXED", "as HOM-INV but for one fixed z-element j at a time",
            _hom_inv_fixed_cases, _hom_inv_holds, results=("inverse images under homomorphisms",)),
    Theorem("HOM-KERNEL", "if a family with meet 0 has all preimages inside Z(L), so does the "
            "preimage of 0 (families of size <= 2 and the full set; all endomorphisms)",
            _hom_kernel_cases, _hom_kernel_holds, results=("kernels of homomorphisms",)),
    Theorem("HOM-INV-IDEAL", "HOM-INV with preimages read as down-sets {x : f(x) <= y}, over "
            "endomorphisms preserving 0, 1 and products", _hom_inv_ideal_cases,
            _hom_inv_ideal_holds, results=()),
    Theorem("HOM-KERNEL-IDEAL", "HOM-KERNEL with down-set preimages over endomorphisms preserving "
            "0, 1 and products", _hom_kernel_ideal_cases, _hom_kernel_ideal_holds, results=()),
    Theorem("REGULAR-STRONGZ", "in a regular lattice every element is a strong z-element",
            lambda ml: (("element", x) for x in _els(ml)), _regular_holds,
            hypothesis=lambda ml: sp.lattice_predicates(ml).regular, hypothesis_name="regular",
            results=("regular lattices are strong z",)),
    Theorem("CZ-LAWS", "cz is extensive, monotone, idempotent; cz(a) = 1 iff a = 1; cz(a) = a iff "
            "a is z; sqrt(a) <= cz(a); sqrt(cz a) = cz(sqrt a); cz(ab) = cz(a^b) = cz(a)^cz(b); "
            "cz(a) v cz(b) <= cz(a v b) = cz(cz(a) v cz(b)); cz(a) <= m_a; cz(a^n) = cz(a)",
            _cz_cases, _cz_holds, results=("z-closure properties",)),
    Theorem("CZ-JOIN-EQ", "Z(L) closed under binary joins iff cz preserves binary joins, and "
            "likewise for arbitrary non-empty joins", lambda ml: [("equivalence",)], _join_eq_holds,
            results=("join closure equivalence",)),
    Theorem("PZ-CHAR", "pz iff semiprimes are z iff m_a = meet of primes above a iff cz = sqrt",
            lambda ml: [("equivalence",)], _pz_holds, results=("pz characterisation",)),
    Theorem("NUCLEUS-SZI", "under szi: cz(ab) = cz(a)cz(b) = cz(a cz b) = cz(cz a b) = "
            "cz(cz a cz b)", _nucleus_cases, _nucleus_holds, **_SZI,
            results=("quantic nucleus identities", "z-closure of products under szi")),
    Theorem("QUOTIENT-FRAME", "Z(L) with cz(ab) and cz-joins is a frame with product = meet; cz "
            "is a surjective homomorphism onto it", _quotient_cases, _quotient_holds,
            results=("quotient multiplicative lattice", "Z(L) is a compact frame")),
    Theorem("EQ-IRR", "z-(strongly) irreducible iff z-element and (strongly) irreducible; primes "
            "are strongly irreducible; z-strongly irreducible implies z-irreducible",
            _eq_irr_cases, _eq_irr_holds,
            results=("irreducible equivalences", "prime implies strongly irreducible")),
    Theorem("Z-MIN-SI", "every proper z-element lies below a minimal z-strongly irreducible "
            "element", _min_si_cases, _min_si_holds,
            results=("minimal z-strongly irreducible elements",)),
    Theorem("ZCHAIN", "if every proper z-element is z-strongly irreducible then Z(L) is a chain",
            _chain_cases, _chain_holds, hypothesis=_all_proper_z_si,
            hypothesis_name="all proper z-elements z-strongly irreducible",
            results=("totally ordered Z(L)",)),
    Theorem("Z-DECOMP", "every z-element is an irredundant finite meet of z-irreducible elements",
            _decomp_cases, _decomp_holds, results=("z-irreducible decomposition",)),
    Theorem("EQ-PRIME", "under szi: z-prime iff z-element and prime",
            _per_element("element"), _eq_prime_holds, **_SZI, results=("z-prime equivalence",)),
    Theorem("MIN-ZPRIME", "minimal z-primes exist (maximal elements are z-prime), every z-prime "
            "lies above one, and V_z(p) consists of z-primes above p",
            _minzprime_cases, _minzprime_holds, hypothesis=_nontrivial, hypothesis_name="nontrivial",
            results=("existence of minimal z-primes", "finitely many minimal z-primes")),
    Theorem("EQ-SEMIPRIME", "under szi: z-semiprime iff z-element and semiprime",
            _per_element("element"), _eq_semiprime_holds, **_SZI,
            results=("z-semiprime equivalence",)),
    Theorem("VPSS", "under szi: a z-element is z-prime iff z-semiprime and z-strongly irreducible",
            _vpss_cases, _vpss_holds, **_SZI,
            results=("z-prime as z-semiprime and z-strongly irreducible",)),
    Theorem("EQ-PRIMARY", "under szi: z-primary iff z-element and primary",
            _per_element("element"), _eq_primary_holds, **_SZI,
            results=("z-primary equivalence",)),
]}

# Every result the toolkit claims to check, and the theorem id that checks it.
RESULTS: dict[str, str] = {
    result: t.id for t in CATALOG.values() for result in t.results
}

REQUIRED_RESULTS = (
    "multiplication basics", "maximal elements are prime", "existence of maximal elements",
    "z-elements closed under meets", "z-element characterisation by m_x",
    "maximal elements are z-elements", "Jacobson radical is a z-element",
    "minimal primes over z-elements", "zero is a z-element when semisimple",
    "residuals of z-elements", "annihilators in semisimple lattices", "quasi-local pz lattices",
    "semisimple prime/z dichotomy", "product closure characterisation",
    "inverse images under homomorphisms", "kernels of homomorphisms",
    "regular lattices are strong z", "z-closure properties", "join closure equivalence",
    "pz characterisation", "quantic nucleus identities", "quotient multiplicative lattice",
    "Z(L) is a compact frame", "irreducible equivalences", "minimal z-strongly irreducible elements",
    "totally ordered Z(L)", "z-irreducible decomposition", "z-prime equivalence",
    "existence of minimal z-primes", "finitely many minimal z-primes", "z-semiprime equivalence",
    "z-prime as z-semiprime and z-strongly irreducible", "z-primary equivalence",
)


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return CATALOG[theorem_id]
    except KeyError:
        raise UnknownTheoremId(
            f"unknown theorem id {theorem_id!r}; known: {', '.join(CATALOG)}") from None


def run_theorem(ml: MultiplicativeLattice, theorem_id: str) -> TheoremReport:
    t = get_theorem(theorem_id)
    if t.hypothesis is not None and not t.hypothesis(ml):
        return TheoremReport(t.id, ml.name, Verdict.NOT_APPLICABLE,
                             note=f"hypothesis not met: {t.hypothesis_name}")
    count = 0
    for case in t.cases(ml):
        count += 1
        if not t.holds(ml, case):
            return TheoremReport(t.id, ml.name, Verdict.FAIL, case, _label(ml, case), count)
    return TheoremReport(t.id, ml.name, Verdict.PASS, cases_checked=count)


def run_theorems(ml: MultiplicativeLattice,
                 selection: Iterable[str] | None = None) -> list[TheoremReport]:
    """Run the selected theorems (all by default) exhaustively on ``ml``."""
    ids = list(CATALOG) if selection is None else list(selection)
    for tid in ids:
        get_theorem(tid)
    return [run_theorem(ml, tid) for tid in ids]


def recheck(ml: MultiplicativeLattice, theorem_id: str, witness: Case) -> bool:
    """True when ``witness`` still violates the theorem on ``ml``."""
    return not get_theorem(theorem_id).holds(ml, witness)

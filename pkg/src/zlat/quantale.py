"""Multiplications on finite lattices, residuation, and the built-in fixtures."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .errors import (
    BadParam,
    DistributivityFails,
    IdentityLawFails,
    NotAssociative,
    NotCommutative,
    ShapeMismatch,
    ZeroExponent,
)
from .lattice import FiniteLattice, chain, lattice_from_pairs, validate_lattice


@dataclass(frozen=True)
class MultTable:
    product: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "MultTable":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))


class MultiplicativeLattice:
    """A finite lattice with a validated commutative unital quantale product.

    Lattice queries (``le``, ``meet``, ``join_table`` ...) are forwarded to
    the underlying :class:`FiniteLattice`. Derived sets are memoised per
    instance; see :meth:`memo`.
    """

    def __init__(self, lattice: FiniteLattice, mult: MultTable, name: str = ""):
        self.lattice = lattice
        self.mult = mult
        self.name = name or f"L{lattice.n}"
        self.product = mult.product
        self._cache: dict[str, object] = {}
        self._lock = threading.RLock()

    def __getattr__(self, attr):
        if attr.startswith("__") or attr in ("lattice", "_cache", "_lock"):
            raise AttributeError(attr)
        return getattr(self.lattice, attr)

    def __repr__(self) -> str:
        return f"MultiplicativeLattice({self.name!r}, n={self.lattice.n})"

    def memo(self, key: str, compute: Callable[[], object]):
        """Compute ``key`` once; later calls (from any thread) reuse it."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    # ---- arithmetic ---------------------------------------------------------
    def multiply(self, x: int, y: int) -> int:
        return self.product[x][y]

    @property
    def power_cap(self) -> int:
        return 2 * self.lattice.n

    def power(self, x: int, k: int) -> int:
        """x**k; exponents beyond the stabilisation cap return the stable value."""
        if k < 1:
            raise ZeroExponent(f"power needs a positive exponent, got {k}")
        k = min(k, self.power_cap)
        p = self.product
        acc = x
        for _ in range(k - 1):
            acc = p[acc][x]
        return acc

    def stable_power(self, x: int) -> int:
        """The eventual value of x, x**2, x**3, ... (powers descend)."""
        return self.memo("stable_powers", self._stable_powers)[x]

    def _stable_powers(self) -> tuple[int, ...]:
        return tuple(self.power(x, self.power_cap) for x in range(self.lattice.n))

    def residual(self, a: int, b: int) -> int:
        """(a : b), the join of every l with l*b <= a."""
        lat, p = self.lattice, self.product
        return lat.join_all(l for l in range(lat.n) if lat.leq[p[l][b]][a])

    def annihilator(self, b: int) -> int:
        return self.residual(self.lattice.bottom, b)

    def is_frame(self) -> bool:
        return self.product == self.lattice.meet_table


def validate_quantale(lat: FiniteLattice, mult: MultTable | Sequence[Sequence[int]],
                      name: str = "") -> MultiplicativeLattice:
    """Check commutativity, associativity, the identity law and join distributivity.

    Distributivity over arbitrary joins is checked as the binary law plus
    ``x*0 = 0``, which suffices for finite lattices.
    """
    if not isinstance(mult, MultTable):
        mult = MultTable.from_rows(mult)
    p = mult.product
    n = lat.n
    if len(p) != n or any(len(row) != n for row in p):
        raise ShapeMismatch(f"multiplication table must be {n}x{n}")
    for row in p:
        for v in row:
            lat.check_member(v)
    for x in range(n):
        for y in range(x + 1, n):
            if p[x][y] != p[y][x]:
                raise NotCommutative(
                    f"{lat.labels[x]}*{lat.labels[y]} != {lat.labels[y]}*{lat.labels[x]}", (x, y))
    for x in range(n):
        if p[lat.top][x] != x:
            raise IdentityLawFails(f"1*{lat.labels[x]} = {lat.labels[p[lat.top][x]]}", (x,))
    for x in range(n):
        if p[x][lat.bottom] != lat.bottom:
            raise DistributivityFails(
                f"{lat.labels[x]}*0 = {lat.labels[p[x][lat.bottom]]}, expected 0", (x, lat.bottom))
    j = lat.join_table
    for x in range(n):
        px = p[x]
        for y in range(n):
            for z in range(y + 1, n):
                if px[j[y][z]] != j[px[y]][px[z]]:
                    raise DistributivityFails(
                        f"{lat.labels[x]}*({lat.labels[y]} v {lat.labels[z]}) != "
                        f"{lat.labels[x]}*{lat.labels[y]} v {lat.labels[x]}*{lat.labels[z]}",
                        (x, y, z))
    for x in range(n):
        for y in range(n):
            pxy = p[x][y]
            for z in range(n):
                if p[pxy][z] != p[x][p[y][z]]:
                    raise NotAssociative(
                        f"({lat.labels[x]}*{lat.labels[y]})*{lat.labels[z]} != "
                        f"{lat.labels[x]}*({lat.labels[y]}*{lat.labels[z]})", (x, y, z))
    ml = MultiplicativeLattice(lat, mult, name)
    _assert_multiplication_basics(ml)
    return ml


def _assert_multiplication_basics(ml: MultiplicativeLattice) -> None:
    # consequences of the axioms; a failure here is a bug in the checks above
    lat, p, le = ml.lattice, ml.product, ml.lattice.leq
    for x in range(lat.n):
        for y in range(lat.n):
            assert le[p[x][y]][x] and le[p[x][y]][lat.meet_table[x][y]]
            if le[x][y]:
                for z in range(lat.n):
                    assert le[p[x][z]][p[y][z]]


def multiplication_basics_violation(ml: MultiplicativeLattice):
    """First (law, x, y[, u, v]) tuple violating the elementary product laws, or None."""
    lat, p, le = ml.lattice, ml.product, ml.lattice.leq
    n = lat.n
    for x in range(n):
        if p[x][lat.bottom] != lat.bottom:
            return ("x0=0", x)
        for y in range(n):
            if not le[p[x][y]][x]:
                return ("xy<=x", x, y)
            if not le[p[x][y]][lat.meet_table[x][y]]:
                return ("xy<=x^y", x, y)
            if le[x][y]:
                for z in range(n):
                    if not le[p[x][z]][p[y][z]]:
                        return ("monotone", x, y, z)
                for u in range(n):
                    for v in range(n):
                        if le[u][v] and not le[p[x][u]][p[y][v]]:
                            return ("monotone2", x, y, u, v)
    return None


# ---- fixtures -----------------------------------------------------------------

def frame_of(lat: FiniteLattice, name: str = "") -> MultiplicativeLattice:
    """``lat`` with meet as multiplication (validated, so it must be distributive)."""
    return validate_quantale(lat, MultTable(lat.meet_table), name or f"frame{lat.n}")


def chain_frame(n: int) -> MultiplicativeLattice:
    if n < 1:
        raise BadParam(f"chain_frame needs n >= 1, got {n}")
    if n == 3:
        labels = ("0", "m", "1")
    else:
        labels = None
    return frame_of(chain(n, labels), f"C{n}")


def boolean_lattice(k: int) -> FiniteLattice:
    if k < 1:
        raise BadParam(f"boolean_frame needs k >= 1, got {k}")
    n = 1 << k
    pairs = [(s, t) for s in range(n) for t in range(n) if s & t == s]
    atoms = "abcdefghijklmnopqrstuvwxyz"

    def name(s: int) -> str:
        if s == 0:
            return "0"
        if s == n - 1:
            return "1"
        return "".join(atoms[i] for i in range(k) if s >> i & 1)

    return lattice_from_pairs(n, pairs, [name(s) for s in range(n)])


def boolean_frame(k: int) -> MultiplicativeLattice:
    return frame_of(boolean_lattice(k), f"B{1 << k}")


def zn_ideal(n: int) -> MultiplicativeLattice:
    """Ideal lattice of Z/nZ: divisors d of n, (a) <= (b) iff b | a, (a)(b) = (gcd(ab, n))."""
    if n < 1:
        raise BadParam(f"zn_ideal needs n >= 1, got {n}")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    idx = {d: i for i, d in enumerate(divisors)}
    pairs = [(idx[a], idx[b]) for a in divisors for b in divisors if a % b == 0]
    lat = lattice_from_pairs(len(divisors), pairs, [f"({d})" for d in divisors])
    table = [[idx[gcd(a * b, n)] for b in divisors] for a in divisors]
    return validate_quantale(lat, table, f"Z{n}")


def relabel(ml: MultiplicativeLattice, labels: Sequence[str], name: str = "") -> MultiplicativeLattice:
    """Same structure and element order, new labels."""
    rel = validate_lattice(ml.lattice.leq, labels)
    return validate_quantale(rel, ml.mult, name or ml.name)


FIXTURE_FAMILIES = ("chain_frame", "boolean_frame", "zn_ideal", "frame_of")


def build_fixture(family: str, *params) -> MultiplicativeLattice:
    """Build a named structure family: ``chain_frame(n)``, ``boolean_frame(k)``,
    ``zn_ideal(n)`` or ``frame_of(lattice)``."""
    if family == "chain_frame":
        return chain_frame(*params)
    if family == "boolean_frame":
        return boolean_frame(*params)
    if family == "zn_ideal":
        return zn_ideal(*params)
    if family == "frame_of":
        return frame_of(*params)
    raise BadParam(f"unknown fixture family {family!r}; choose from {FIXTURE_FAMILIES}")


def named_fixtures() -> dict[str, MultiplicativeLattice]:
    """The four reference structures used throughout the tests and docs."""
    return {
        "C3": chain_frame(3),
        "B4": boolean_frame(2),
        # ideals (1) > (2) > (4) > (8) of Z_8, i.e. the chain 0 < q < m < 1
        "Z8": relabel(zn_ideal(8), ("1", "m", "q", "0"), "Z8"),
        "D12": relabel(zn_ideal(12), zn_ideal(12).labels, "D12"),
    }


def named_fixture(name: str) -> MultiplicativeLattice:
    fixtures = named_fixtures()
    if name in fixtures:
        return fixtures[name]
    # accept family-style names like C5, B8, Z9
    kind, digits = name[:1], name[1:]
    if digits.isdigit():
        v = int(digits)
        if kind == "C":
            return chain_frame(v)
        if kind == "B" and v > 1 and v & (v - 1) == 0:
            return boolean_frame(v.bit_length() - 1)
        if kind in "ZD":
            return zn_ideal(v)
    raise BadParam(f"unknown fixture {name!r}; built-ins are {sorted(fixtures)}")

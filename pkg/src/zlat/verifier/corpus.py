"""Exhaustive enumeration of small multiplicative lattices up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

import numpy as np

from ..errors import BadParam, CeilingExceeded, LatticeError, QuantaleError
from ..lattice import FiniteLattice, validate_lattice
from ..quantale import MultiplicativeLattice, MultTable, named_fixtures, validate_quantale

DEFAULT_CEILING = 6
MULT_MODES = ("all", "frame-only", "fixtures-only")


@dataclass(frozen=True)
class CorpusSpec:
    max_n: int
    mult: str = "all"
    iso_reduction: bool = True
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if self.max_n < 1:
            raise BadParam(f"max_n must be >= 1, got {self.max_n}")
        if self.mult not in MULT_MODES:
            raise BadParam(f"mult mode must be one of {MULT_MODES}, got {self.mult!r}")


# ---- canonical forms --------------------------------------------------------------

def order_code(leq, perm) -> tuple[int, ...]:
    # 0 where perm[i] <= perm[j]; the minimum puts bottom first
    return tuple(0 if leq[perm[i]][perm[j]] else 1 for i in range(len(perm)) for j in range(len(perm)))


def canonical_order(lat: FiniteLattice) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(code, perm) minimising the order encoding over all relabellings."""
    best = None
    for perm in permutations(range(lat.n)):
        code = order_code(lat.leq, perm)
        if best is None or code < best[0]:
            best = (code, perm)
    return best


def automorphisms(lat: FiniteLattice) -> list[tuple[int, ...]]:
    """Order automorphisms of ``lat`` as maps old -> new."""
    n = lat.n
    out = []
    for perm in permutations(range(n)):
        if all(lat.leq[perm[i]][perm[j]] == lat.leq[i][j] for i in range(n) for j in range(n)):
            out.append(perm)
    return out


def mult_code(table, perm) -> tuple[int, ...]:
    # perm maps new position -> old element; inverse translates values back
    inv = [0] * len(perm)
    for new, old in enumerate(perm):
        inv[old] = new
    return tuple(inv[table[perm[i]][perm[j]]] for i in range(len(perm)) for j in range(len(perm)))


def canonical_key(ml: MultiplicativeLattice) -> tuple:
    """Isomorphism invariant of a multiplicative lattice: minimal (order, product) code."""
    lat = ml.lattice
    best = None
    for perm in permutations(range(lat.n)):
        key = (order_code(lat.leq, perm), mult_code(ml.product, perm))
        if best is None or key < best:
            best = key
    return best


def permute_lattice(lat: FiniteLattice, perm) -> FiniteLattice:
    n = lat.n
    rel = [[lat.leq[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return validate_lattice(rel)


# ---- lattices -----------------------------------------------------------------------

def _strict_orders_natural(k: int) -> Iterator[np.ndarray]:
    """Strict partial orders on range(k) in which i < j implies i < j as integers."""
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for bits in product((False, True), repeat=len(pairs)):
        rel = np.zeros((k, k), dtype=bool)
        for (i, j), b in zip(pairs, bits):
            rel[i, j] = b
        if np.array_equal(rel, rel | (rel.astype(np.int64) @ rel.astype(np.int64) > 0)):
            yield rel


def _bounded(strict: np.ndarray) -> np.ndarray:
    k = strict.shape[0]
    n = k + 2
    rel = np.eye(n, dtype=bool)
    rel[0, :] = True
    rel[:, n - 1] = True
    rel[1:n - 1, 1:n - 1] |= strict
    return rel


def lattices_of_size(n: int, iso_reduction: bool = True) -> list[FiniteLattice]:
    """All lattices with ``n`` elements, one per isomorphism class, in canonical order."""
    if n < 1:
        return []
    if n == 1:
        return [validate_lattice([[True]])]
    found: dict[tuple, FiniteLattice] = {}
    raw: list[FiniteLattice] = []
    for strict in _strict_orders_natural(n - 2):
        try:
            lat = validate_lattice(_bounded(strict))
        except LatticeError:
            continue
        if not iso_reduction:
            raw.append(lat)
            continue
        code, perm = canonical_order(lat)
        if code not in found:
            found[code] = permute_lattice(lat, perm)
    if not iso_reduction:
        return raw
    return [found[c] for c in sorted(found)]


def naive_lattice_classes(n: int) -> list[FiniteLattice]:
    """Independent cross-check: every orientation of every pair, deduplicated by
    pairwise isomorphism of Hasse diagrams (networkx VF2)."""
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    if n == 1:
        return [validate_lattice([[True]])]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    reps: list[tuple[FiniteLattice, "nx.DiGraph"]] = []
    for states in product((0, 1, 2), repeat=len(pairs)):
        rel = np.eye(n, dtype=bool)
        for (i, j), s in zip(pairs, states):
            if s == 1:
                rel[i, j] = True
            elif s == 2:
                rel[j, i] = True
        closed = rel | (rel.astype(np.int64) @ rel.astype(np.int64) > 0)
        if not np.array_equal(closed, rel):
            continue
        try:
            lat = validate_lattice(rel)
        except LatticeError:
            continue
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(lat.covers)
        if not any(DiGraphMatcher(g, h).is_isomorphic() for _, h in reps):
            reps.append((lat, g))
    return [lat for lat, _ in reps]


# ---- multiplications ------------------------------------------------------------------

def _extend(lat: FiniteLattice, ji: list[int], assign: dict[tuple[int, int], int]):
    below = lat.irreducibles_below
    n = lat.n
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            v = lat.bottom
            for i in below[x]:
                for j in below[y]:
                    v = lat.join_table[v][assign[(i, j) if i <= j else (j, i)]]
            table[x][y] = table[y][x] = v
    return table


def multiplications(lat: FiniteLattice) -> list[MultTable]:
    """Every quantale multiplication on ``lat`` with identity top.

    Products are chosen on pairs of join-irreducibles (below their meet, as
    every valid product must be), extended by join distributivity, then
    filtered by the axioms. Order follows the product-table encoding.
    """
    ji = sorted(lat.join_irreducibles())
    free: list[tuple[int, int]] = []
    fixed: dict[tuple[int, int], int] = {}
    for a, b in ((a, b) for i, a in enumerate(ji) for b in ji[i:]):
        if a == lat.top:
            fixed[(a, b)] = b
        elif b == lat.top:
            fixed[(a, b)] = a
        else:
            free.append((a, b))
    choices = [sorted(lat.down_set(lat.meet_table[a][b])) for a, b in free]
    tables = set()
    for pick in product(*choices):
        assign = dict(fixed)
        assign.update(zip(free, pick))
        table = _extend(lat, ji, assign)
        try:
            validate_quantale(lat, table)
        except QuantaleError:
            continue
        tables.add(tuple(map(tuple, table)))
    return [MultTable(t) for t in sorted(tables)]


def naive_multiplications(lat: FiniteLattice, full: bool = False) -> list[MultTable]:
    """Cross-check oracle: brute force over symmetric tables.

    With ``full`` every entry is free (feasible for n <= 3); otherwise rows for
    top and bottom are fixed by the identity and annihilation laws.
    """
    n = lat.n
    if full:
        cells = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        cells = [(i, j) for i in range(n) for j in range(i, n)
                 if lat.top not in (i, j) and lat.bottom not in (i, j)]
    out = []
    for values in product(range(n), repeat=len(cells)):
        table = [[None] * n for _ in range(n)]
        if not full:
            for x in range(n):
                table[lat.top][x] = table[x][lat.top] = x
                table[lat.bottom][x] = table[x][lat.bottom] = lat.bottom
        for (i, j), v in zip(cells, values):
            table[i][j] = table[j][i] = v
        try:
            validate_quantale(lat, table)
        except QuantaleError:
            continue
        out.append(MultTable.from_rows(table))
    return sorted(out, key=lambda t: t.product)


def multiplications_up_to_iso(lat: FiniteLattice, autos=None) -> list[MultTable]:
    autos = automorphisms(lat) if autos is None else autos
    seen = {}
    for t in multiplications(lat):
        key = min(mult_code(t.product, a) for a in autos)
        seen.setdefault(key, MultTable(tuple(tuple(key[i * lat.n:(i + 1) * lat.n])
                                             for i in range(lat.n))))
    return [seen[k] for k in sorted(seen)]


# ---- the stream -------------------------------------------------------------------------

def enumerate_corpus(spec: CorpusSpec) -> Iterator[MultiplicativeLattice]:
    """Stream every structure allowed by ``spec`` in a deterministic order.

    Order: by size, then canonical lattice code, then product-table code.
    Lattices that carry no valid multiplication contribute nothing.
    """
    # checked eagerly, before the first structure is requested
    if spec.max_n > spec.ceiling:
        raise CeilingExceeded(f"max_n={spec.max_n} exceeds the ceiling {spec.ceiling}")
    return _stream(spec)


def _stream(spec: CorpusSpec) -> Iterator[MultiplicativeLattice]:
    if spec.mult == "fixtures-only":
        for name, ml in named_fixtures().items():
            if ml.lattice.n <= spec.max_n:
                yield ml
        return
    for n in range(1, spec.max_n + 1):
        for li, lat in enumerate(lattices_of_size(n, spec.iso_reduction)):
            if spec.mult == "frame-only":
                try:
                    tables = [validate_quantale(lat, lat.meet_table).mult]
                except QuantaleError:
                    tables = []
            elif spec.iso_reduction:
                tables = multiplications_up_to_iso(lat)
            else:
                tables = multiplications(lat)
            for mi, t in enumerate(tables):
                yield validate_quantale(lat, t, f"n{n}.L{li}.M{mi}")


def corpus(max_n: int = 5, mult: str = "all") -> list[MultiplicativeLattice]:
    return list(enumerate_corpus(CorpusSpec(max_n, mult)))

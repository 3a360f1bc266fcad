"""Finite bounded lattices given by an order relation.

Elements are the integers ``0..n-1``; identity is positional. Bottom and top
are computed from the order, never declared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyUniverse,
    ForeignElement,
    NoUniqueBound,
    NotAntisymmetric,
    ShapeMismatch,
)

MAX_UNIVERSE = 64

ElementSet = frozenset  # frozenset[int]


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    rel = np.array(leq, dtype=bool, copy=True)
    n = rel.shape[0]
    rel[np.diag_indices(n)] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


def _find_cycle(rel: np.ndarray) -> tuple[int, ...]:
    n = rel.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i, j] and rel[j, i]:
                return (i, j)
    return ()


def _bound(le: tuple[tuple[bool, ...], ...], a: int, b: int, upper: bool):
    n = len(le)
    if upper:
        common = [c for c in range(n) if le[a][c] and le[b][c]]
        extreme = [c for c in common if not any(d != c and le[d][c] for d in common)]
    else:
        common = [c for c in range(n) if le[c][a] and le[c][b]]
        extreme = [c for c in common if not any(d != c and le[c][d] for d in common)]
    return extreme


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A validated finite lattice.

    Build instances with :func:`validate_lattice`; the constructor trusts its
    arguments.
    """

    n: int
    leq: tuple[tuple[bool, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    covers: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index.update({lab: i for i, lab in enumerate(self.labels)})

    # ---- basic queries ---------------------------------------------------
    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    @property
    def elements(self) -> range:
        return range(self.n)

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ForeignElement(f"no element labelled {label!r}") from None

    def names(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(xs)]

    def check_member(self, x: int) -> int:
        if not (isinstance(x, (int, np.integer)) and 0 <= x < self.n):
            raise ForeignElement(f"{x!r} is not an element of this {self.n}-element lattice")
        return int(x)

    # ---- sets ---------------------------------------------------------------
    def bound_of_set(self, kind: str, members: Iterable[int]) -> int:
        """Meet or join of a finite set; the empty meet is top, the empty join bottom."""
        members = [self.check_member(x) for x in members]
        if kind == "meet":
            return reduce(self.meet, members, self.top)
        if kind == "join":
            return reduce(self.join, members, self.bottom)
        raise ValueError(f"kind must be 'meet' or 'join', not {kind!r}")

    def meet_all(self, members: Iterable[int]) -> int:
        # unchecked fast path for internal callers; see bound_of_set
        return reduce(self.meet, members, self.top)

    def join_all(self, members: Iterable[int]) -> int:
        return reduce(self.join, members, self.bottom)

    def up_set(self, x: int) -> ElementSet:
        return frozenset(y for y in range(self.n) if self.leq[x][y])

    def down_set(self, x: int) -> ElementSet:
        return frozenset(y for y in range(self.n) if self.leq[y][x])

    def minimal(self, s: Iterable[int]) -> tuple[int, ...]:
        s = set(s)
        return tuple(sorted(x for x in s if not any(self.lt(y, x) for y in s)))

    def maximal(self, s: Iterable[int]) -> tuple[int, ...]:
        s = set(s)
        return tuple(sorted(x for x in s if not any(self.lt(x, y) for y in s)))

    def complements_of(self, x: int) -> ElementSet:
        x = self.check_member(x)
        return frozenset(
            y for y in range(self.n)
            if self.meet_table[x][y] == self.bottom and self.join_table[x][y] == self.top
        )

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        below = [[] for _ in range(self.n)]
        for a, b in self.covers:
            below[b].append(a)
        return tuple(tuple(sorted(c)) for c in below)

    def join_irreducibles(self) -> ElementSet:
        """Nonzero elements with exactly one lower cover."""
        return frozenset(x for x in range(self.n) if len(self.lower_covers[x]) == 1)

    @cached_property
    def irreducibles_below(self) -> tuple[tuple[int, ...], ...]:
        ji = sorted(self.join_irreducibles())
        return tuple(tuple(j for j in ji if self.leq[j][x]) for x in range(self.n))

    def is_chain(self, s: Iterable[int] | None = None) -> bool:
        s = list(range(self.n) if s is None else s)
        return all(self.leq[a][b] or self.leq[b][a] for a in s for b in s)

    def leq_array(self) -> np.ndarray:
        arr = np.array(self.leq, dtype=bool)
        arr.flags.writeable = False
        return arr

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, labels={list(self.labels)})"


def _default_labels(n: int, bottom: int, top: int) -> tuple[str, ...]:
    letters = iter("abcdefghijklmnopqrstuvwxyz")
    labels = []
    for i in range(n):
        if i == bottom:
            labels.append("0")
        elif i == top:
            labels.append("1")
        else:
            lab = next(letters, None)
            labels.append(lab if lab is not None else f"e{i}")
    return tuple(labels)


def validate_lattice(order: Sequence[Sequence[bool]] | np.ndarray,
                     labels: Sequence[str] | None = None,
                     max_size: int = MAX_UNIVERSE) -> FiniteLattice:
    """Check that ``order`` generates a lattice order and tabulate it.

    ``order[i][j]`` true means i <= j. Any generating set of pairs is
    accepted: the relation is closed reflexively and transitively first.
    """
    rel = np.asarray(order, dtype=bool)
    if rel.size == 0:
        raise EmptyUniverse("a lattice needs at least one element")
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise ShapeMismatch(f"order relation must be square, got shape {rel.shape}")
    n = rel.shape[0]
    if n == 0:
        raise EmptyUniverse("a lattice needs at least one element")
    if n > max_size:
        raise ShapeMismatch(f"universe of {n} elements exceeds the configured maximum {max_size}")
    if labels is not None and len(labels) != n:
        raise ShapeMismatch(f"{len(labels)} labels for {n} elements")
    rel = transitive_closure(rel)
    cycle = _find_cycle(rel)
    if cycle:
        raise NotAntisymmetric(cycle, tuple(labels) if labels else None)

    le = tuple(tuple(bool(v) for v in row) for row in rel)
    shown = tuple(labels) if labels is not None else None
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            lub = _bound(le, a, b, upper=True)
            if len(lub) != 1:
                raise NoUniqueBound("join", (a, b), tuple(lub), shown)
            glb = _bound(le, a, b, upper=False)
            if len(glb) != 1:
                raise NoUniqueBound("meet", (a, b), tuple(glb), shown)
            join[a][b] = join[b][a] = lub[0]
            meet[a][b] = meet[b][a] = glb[0]

    bottom = next(x for x in range(n) if all(le[x]))
    top = next(x for x in range(n) if all(le[y][x] for y in range(n)))
    strict = rel.copy()
    strict[np.diag_indices(n)] = False
    hasse = strict & ~(strict.astype(np.int64) @ strict.astype(np.int64)).astype(bool)
    covers = tuple((int(a), int(b)) for a, b in zip(*np.nonzero(hasse)))
    if labels is None:
        labels = _default_labels(n, bottom, top)
    return FiniteLattice(
        n=n,
        leq=le,
        meet_table=tuple(map(tuple, meet)),
        join_table=tuple(map(tuple, join)),
        bottom=bottom,
        top=top,
        covers=covers,
        labels=tuple(labels),
    )


def lattice_from_pairs(n: int, pairs: Iterable[tuple[int, int]],
                       labels: Sequence[str] | None = None) -> FiniteLattice:
    """Lattice generated by ``i <= j`` pairs over ``range(n)``."""
    rel = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        rel[i, j] = True
    return validate_lattice(rel, labels)


def chain(n: int, labels: Sequence[str] | None = None) -> FiniteLattice:
    return lattice_from_pairs(n, [(i, i + 1) for i in range(n - 1)], labels)


# ---- homomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class LatticeHom:
    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def preimage(self, y: int) -> ElementSet:
        return frozenset(x for x, fx in enumerate(self.map) if fx == y)


@dataclass
class HomReport:
    """Verdict of :func:`check_homomorphism`.

    ``violations`` maps each failed law (``order``, ``join``, ``meet``,
    ``mult``) to its first violating pair.
    """

    is_homomorphism: bool
    violations: dict[str, tuple[int, int]]
    mult_checked: bool = False

    @property
    def mult_preserved(self) -> bool | None:
        if not self.mult_checked:
            return None
        return "mult" not in self.violations


def check_homomorphism(h: LatticeHom, strict_mult: bool = False) -> HomReport:
    """Check that ``h`` preserves order, binary joins and binary meets.

    With ``strict_mult`` (both ends multiplicative) products are checked too
    and reported separately; they do not affect ``is_homomorphism``.
    """
    src, tgt, f = h.source, h.target, h.map
    if len(f) != src.n:
        raise ShapeMismatch(f"map has length {len(f)}, source has {src.n} elements")
    for y in f:
        tgt.check_member(y)
    violations: dict[str, tuple[int, int]] = {}
    for a in range(src.n):
        for b in range(src.n):
            if "order" not in violations and src.leq[a][b] and not tgt.leq[f[a]][f[b]]:
                violations["order"] = (a, b)
            if "join" not in violations and f[src.join_table[a][b]] != tgt.join_table[f[a]][f[b]]:
                violations["join"] = (a, b)
            if "meet" not in violations and f[src.meet_table[a][b]] != tgt.meet_table[f[a]][f[b]]:
                violations["meet"] = (a, b)
    is_hom = not violations
    if strict_mult:
        sp, tp = src.mult.product, tgt.mult.product
        for a in range(src.n):
            for b in range(a, src.n):
                if f[sp[a][b]] != tp[f[a]][f[b]]:
                    violations["mult"] = (a, b)
                    break
            if "mult" in violations:
                break
    return HomReport(is_hom, violations, mult_checked=strict_mult)


def is_lattice_hom(src: FiniteLattice, tgt: FiniteLattice, f: Sequence[int]) -> bool:
    """Fast yes/no version of :func:`check_homomorphism` without multiplication."""
    sj, sm, tj, tm = src.join_table, src.meet_table, tgt.join_table, tgt.meet_table
    n = src.n
    for a in range(n):
        fa = f[a]
        for b in range(a + 1, n):
            if f[sj[a][b]] != tj[fa][f[b]] or f[sm[a][b]] != tm[fa][f[b]]:
                return False
    return True

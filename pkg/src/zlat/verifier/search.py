"""Bounded counterexample searches over the corpus stream."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .. import spectra as sp
from .. import ztheory as zt
from ..errors import UnknownProperty
from ..quantale import MultiplicativeLattice, named_fixtures
from .corpus import CorpusSpec, enumerate_corpus


@dataclass(frozen=True)
class SearchResult:
    property: str
    found: bool
    structure: MultiplicativeLattice | None = None
    elements: tuple[int, ...] = ()
    searched: int = 0
    note: str = ""

    @property
    def structure_name(self) -> str | None:
        return None if self.structure is None else self.structure.name

    @property
    def element_labels(self) -> tuple[str, ...]:
        if self.structure is None:
            return ()
        return tuple(self.structure.lattice.labels[e] for e in self.elements)

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "outcome": "witness" if self.found else "exhausted",
            "structure": self.structure_name,
            "elements": list(self.element_labels),
            "structures_searched": self.searched,
            "note": self.note,
        }


Finder = Callable[[MultiplicativeLattice], "tuple[int, ...] | None"]


def _first(items: Iterable):
    return next(iter(items), None)


def _zproduct_not_closed(ml):
    Z = sorted(zt.z_elements(ml))
    return _first((a, b) for a in Z for b in Z if ml.product[a][b] not in zt.z_elements(ml))


def _zjoin_not_closed(ml):
    Z = sorted(zt.z_elements(ml))
    j = ml.lattice.join_table
    return _first((a, b) for a in Z for b in Z if j[a][b] not in zt.z_elements(ml))


def _prime_not_z(ml):
    return _first((p,) for p in sorted(sp.primes(ml)) if not zt.is_z_element(ml, p))


def _zprime_not_prime_nonszi(ml):
    if zt.is_szi(ml):
        return None
    return _first((x,) for x in range(ml.lattice.n)
                  if zt.is_z_prime(ml, x) != (zt.is_z_element(ml, x) and sp.is_prime(ml, x)))


def _zero_z_not_semisimple(ml):
    lat = ml.lattice
    if lat.bottom == lat.top:
        return None
    if zt.is_z_element(ml, lat.bottom) and sp.jacobson_radical(ml) != lat.bottom:
        return (lat.bottom,)
    return None


def _cz_neq_ma(ml):
    return _first((a,) for a in range(ml.lattice.n) if zt.z_closure(ml, a) != zt.m_of(ml, a))


def _strongz_neq_z(ml):
    return _first((x,) for x in range(ml.lattice.n)
                  if zt.is_strong_z(ml, x) != zt.is_z_element(ml, x))


PROPERTIES: dict[str, tuple[str, Finder]] = {
    "ZPRODUCT-NOT-CLOSED": ("two z-elements whose product is not a z-element", _zproduct_not_closed),
    "ZJOIN-NOT-CLOSED": ("two z-elements whose join is not a z-element", _zjoin_not_closed),
    "PRIME-NOT-Z": ("a prime element that is not a z-element", _prime_not_z),
    "ZPRIME-NOT-PRIME-NONSZI": ("a non-szi structure where z-prime differs from z-element and prime",
                                _zprime_not_prime_nonszi),
    "ZERO-Z-NOT-SEMISIMPLE": ("0 is a z-element but the Jacobson radical is not 0",
                              _zero_z_not_semisimple),
    "CZ-NEQ-MA": ("an element whose z-closure differs from m_a", _cz_neq_ma),
    "STRONGZ-NEQ-Z": ("an element where the strong-z and z flags differ", _strongz_neq_z),
}


def search_counterexample(prop: str, spec: CorpusSpec,
                          include_fixtures: bool = True) -> SearchResult:
    """First witness for ``prop``, or an exhausted result.

    Structures are visited in stream order: named fixtures that fit within
    ``spec.max_n`` first (unless disabled), then the corpus. An exhausted
    result is a statement about the bounded search only.
    """
    try:
        _, finder = PROPERTIES[prop]
    except KeyError:
        raise UnknownProperty(
            f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}") from None
    corpus_stream = enumerate_corpus(spec)
    stream: list[Iterable[MultiplicativeLattice]] = []
    if include_fixtures and spec.mult != "fixtures-only":
        stream.append(ml for ml in named_fixtures().values() if ml.lattice.n <= spec.max_n)
    stream.append(corpus_stream)
    count = 0
    for part in stream:
        for ml in part:
            count += 1
            hit = finder(ml)
            if hit is not None:
                return SearchResult(prop, True, ml, tuple(hit), count)
    return SearchResult(prop, False, searched=count,
                        note=f"no witness among {count} structures with n <= {spec.max_n}")

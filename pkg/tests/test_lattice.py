import numpy as np
import pytest

import oracle
from zlat.errors import EmptyUniverse, ForeignElement, NoUniqueBound, NotAntisymmetric, ShapeMismatch
from zlat.lattice import LatticeHom, chain, check_homomorphism, lattice_from_pairs, validate_lattice
from zlat.quantale import boolean_lattice, zn_ideal


def test_three_chain():
    lat = chain(3, ["0", "m", "1"])
    assert lat.bottom == 0 and lat.top == 2
    assert lat.labels == ("0", "m", "1")
    assert lat.is_chain()


def test_no_unique_join_reports_pair_and_candidates():
    # 0 < {a,b} < {c,d} < 1, a and b both below c and d
    pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NoUniqueBound) as info:
        lattice_from_pairs(6, pairs, ["0", "a", "b", "c", "d", "1"])
    err = info.value
    assert err.kind == "join"
    assert set(err.pair) == {1, 2}
    assert set(err.candidates) == {3, 4}


def test_cycle_is_rejected():
    rel = [[True, True, False], [True, True, False], [True, True, True]]
    with pytest.raises(NotAntisymmetric):
        validate_lattice(rel)


def test_empty_and_ragged_input():
    with pytest.raises(EmptyUniverse):
        validate_lattice([])
    with pytest.raises(ShapeMismatch):
        validate_lattice([[True, False]])


def test_generating_pairs_are_closed():
    lat = lattice_from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    assert lat.le(0, 3)
    assert lat.covers == ((0, 1), (1, 2), (2, 3))


def test_divisor_lattice_of_12():
    lat = zn_ideal(12).lattice
    assert lat.n == 6
    assert lat.labels[lat.bottom] == "(12)" and lat.labels[lat.top] == "(1)"
    labels, leq, _ = oracle.zn(12)
    assert [list(r) for r in lat.leq] == leq
    assert oracle.glb_lub_ok(leq)


def test_empty_bounds_and_set_meet():
    lat = zn_ideal(12).lattice
    assert lat.meet_all([]) == lat.top
    assert lat.join_all([]) == lat.bottom
    i = lat.index
    assert lat.bound_of_set("meet", {i("(2)"), i("(3)")}) == i("(6)")
    with pytest.raises(ForeignElement):
        lat.bound_of_set("meet", [99])


def test_complements():
    b = boolean_lattice(2)
    assert b.complements_of(b.bottom) == {b.top}
    assert b.complements_of(b.index("a")) == {b.index("b")}
    assert chain(3, ["0", "m", "1"]).complements_of(1) == frozenset()


def test_join_irreducibles():
    assert chain(3, ["0", "m", "1"]).join_irreducibles() == {1, 2}
    b = boolean_lattice(2)
    assert b.names(b.join_irreducibles()) == ["a", "b"]
    d = zn_ideal(12).lattice
    assert set(d.names(d.join_irreducibles())) == {"(3)", "(4)", "(6)"}


def test_tables_match_brute_force_bounds():
    lat = zn_ideal(12).lattice
    le = np.array(lat.leq)
    for a in range(lat.n):
        for b in range(lat.n):
            upper = [u for u in range(lat.n) if le[a, u] and le[b, u]]
            lower = [u for u in range(lat.n) if le[u, a] and le[u, b]]
            assert lat.join(a, b) == min(upper, key=lambda u: le[:, u].sum())
            assert lat.meet(a, b) == max(lower, key=lambda u: le[:, u].sum())


def test_every_element_is_join_of_irreducibles_below():
    for lat in (zn_ideal(12).lattice, boolean_lattice(3), chain(5)):
        for x in range(lat.n):
            assert lat.join_all(lat.irreducibles_below[x]) == x


def test_homomorphisms():
    c3 = chain(3, ["0", "m", "1"])
    b4 = boolean_lattice(2)
    assert check_homomorphism(LatticeHom(c3, c3, (0, 1, 2))).is_homomorphism
    to_b = LatticeHom(c3, b4, (b4.index("0"), b4.index("a"), b4.index("1")))
    assert check_homomorphism(to_b).is_homomorphism
    const = LatticeHom(c3, c3, (2, 2, 2))
    assert check_homomorphism(const).is_homomorphism
    flip = LatticeHom(c3, c3, (2, 1, 0))
    rep = check_homomorphism(flip)
    assert not rep.is_homomorphism and "order" in rep.violations
    with pytest.raises(ShapeMismatch):
        check_homomorphism(LatticeHom(c3, c3, (0, 1)))


def test_strict_mult_is_reported_separately():
    z8 = zn_ideal(8)
    # x -> x v m is a lattice hom on the chain, but f(m*m) = m while f(m)*f(m) = q
    rep = check_homomorphism(LatticeHom(z8, z8, (0, 1, 1, 1)), strict_mult=True)
    assert rep.is_homomorphism
    assert rep.mult_preserved is False
    assert check_homomorphism(LatticeHom(z8, z8, (0, 1, 2, 3))).mult_preserved is None

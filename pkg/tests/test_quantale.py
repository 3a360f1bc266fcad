import pytest

import oracle
from zlat.errors import BadParam, DistributivityFails, IdentityLawFails, NotAssociative, NotCommutative, ZeroExponent
from zlat.lattice import chain
from zlat.quantale import (
    boolean_frame,
    build_fixture,
    chain_frame,
    frame_of,
    multiplication_basics_violation,
    named_fixture,
    validate_quantale,
    zn_ideal,
)


def test_boolean_frame_is_valid():
    b4 = boolean_frame(2)
    assert b4.is_frame()
    assert all(b4.multiply(x, x) == x for x in range(4))


def test_z8_products(fixtures):
    z8 = fixtures["Z8"]
    i = z8.lattice.index
    assert z8.multiply(i("m"), i("m")) == i("q")
    assert z8.multiply(i("m"), i("q")) == i("0")
    assert z8.multiply(i("q"), i("q")) == i("0")
    assert z8.product == tuple(map(tuple, oracle.z8()[2]))


def test_d12_products(fixtures):
    d = fixtures["D12"]
    i = d.lattice.index
    assert d.multiply(i("(2)"), i("(3)")) == i("(6)")
    assert d.product == tuple(map(tuple, oracle.zn(12)[2]))


def test_chain_with_m_squared_top_fails_distributivity():
    lat = chain(3, ["0", "m", "1"])
    table = [[0, 0, 0], [0, 2, 1], [0, 1, 2]]
    with pytest.raises(DistributivityFails):
        validate_quantale(lat, table)


@pytest.mark.parametrize("table,err", [
    ([[0, 0, 0], [0, 1, 1], [0, 0, 2]], NotCommutative),
    ([[0, 0, 0], [0, 1, 1], [0, 1, 1]], IdentityLawFails),
    ([[1, 0, 0], [0, 1, 1], [0, 1, 2]], DistributivityFails),
])
def test_axiom_failures(table, err):
    with pytest.raises(err) as info:
        validate_quantale(chain(3), table)
    assert info.value.witness


def test_non_associative_table_is_rejected():
    # 4-chain 0<a<b<1 with b*b = a*b = a, a*a = 0: (ab)b = a but a(bb) = 0
    lat = chain(4)
    table = [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]]
    with pytest.raises(NotAssociative):
        validate_quantale(lat, table)


def test_powers(fixtures):
    z8 = fixtures["Z8"]
    m = z8.lattice.index("m")
    assert z8.power(m, 1) == m
    assert z8.power(m, 2) == z8.lattice.index("q")
    assert z8.power(m, 3) == z8.lattice.bottom
    assert z8.power(m, 10_000) == z8.lattice.bottom
    with pytest.raises(ZeroExponent):
        z8.power(m, 0)


def test_residuals_and_annihilators(fixtures):
    z8 = fixtures["Z8"]
    i = z8.lattice.index
    assert z8.residual(i("q"), i("m")) == i("m")
    assert z8.annihilator(i("m")) == i("q")
    assert z8.annihilator(z8.lattice.bottom) == z8.lattice.top
    b4 = fixtures["B4"]
    assert b4.annihilator(b4.lattice.index("a")) == b4.lattice.index("b")
    for ml in fixtures.values():
        for a in range(ml.lattice.n):
            assert ml.residual(a, ml.lattice.top) == a
            assert ml.residual(ml.lattice.top, a) == ml.lattice.top


def test_fixture_builders():
    assert chain_frame(3).lattice.labels == ("0", "m", "1")
    d12 = build_fixture("zn_ideal", 12)
    assert d12.lattice.labels == ("(1)", "(2)", "(3)", "(4)", "(6)", "(12)")
    assert build_fixture("frame_of", chain(2)).is_frame()
    for bad in (("chain_frame", 0), ("boolean_frame", 0), ("zn_ideal", 0), ("nope", 1)):
        with pytest.raises(BadParam):
            build_fixture(*bad)
    assert named_fixture("C4").lattice.n == 4
    assert named_fixture("B8").lattice.n == 8
    assert named_fixture("Z9").lattice.n == 3
    with pytest.raises(BadParam):
        named_fixture("Q3")


def test_meet_on_a_nondistributive_lattice_is_not_a_quantale():
    from zlat.lattice import lattice_from_pairs
    n5 = lattice_from_pairs(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
    with pytest.raises(DistributivityFails):
        frame_of(n5)


def test_basic_laws_hold_on_corpus(small_corpus):
    for ml in small_corpus:
        assert multiplication_basics_violation(ml) is None

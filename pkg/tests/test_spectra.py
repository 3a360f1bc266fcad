import pytest

import oracle
from zlat import spectra as sp
from zlat.errors import TrivialLattice
from zlat.verifier.corpus import lattices_of_size
from zlat.quantale import frame_of


def names(ml, xs):
    return {ml.lattice.labels[x] for x in xs}


def test_maximal_elements(fixtures):
    assert names(fixtures["C3"], sp.maximal_elements(fixtures["C3"])) == {"m"}
    assert names(fixtures["D12"], sp.maximal_elements(fixtures["D12"])) == {"(2)", "(3)"}
    assert names(fixtures["B4"], sp.maximal_elements(fixtures["B4"])) == {"a", "b"}
    with pytest.raises(TrivialLattice):
        sp.maximal_elements(frame_of(lattices_of_size(1)[0]))


def test_top_has_no_properness_flags(fixtures):
    for ml in fixtures.values():
        rec = sp.classify_element(ml, ml.lattice.top)
        assert not rec.proper
        assert not any((rec.maximal, rec.prime, rec.semiprime, rec.primary,
                        rec.irreducible, rec.strongly_irreducible))


def test_z8_q_is_primary_not_prime(fixtures):
    z8 = fixtures["Z8"]
    rec = sp.classify_element(z8, z8.lattice.index("q"))
    assert rec.primary and not rec.prime


def test_boolean_atom_is_prime(fixtures):
    b4 = fixtures["B4"]
    rec = sp.classify_element(b4, b4.lattice.index("a"))
    assert rec.prime and rec.strongly_irreducible


def test_radicals(fixtures):
    z8, d12 = fixtures["Z8"], fixtures["D12"]
    for ml in fixtures.values():
        assert sp.radical(ml, ml.lattice.top) == ml.lattice.top
    assert z8.lattice.labels[sp.radical(z8, z8.lattice.bottom)] == "m"
    assert d12.lattice.labels[sp.radical(d12, d12.lattice.index("(4)"))] == "(2)"


def test_radicals_match_oracle(fixtures):
    labels, leq, prod = oracle.zn(12)
    d12 = fixtures["D12"]
    for x in range(6):
        assert sp.radical(d12, x) == oracle.radical(leq, prod, x)


def test_jacobson(fixtures):
    lab = lambda k: fixtures[k].lattice.labels[sp.jacobson_radical(fixtures[k])]
    assert lab("B4") == "0"
    assert lab("C3") == "m"
    assert lab("D12") == "(6)"


def test_minimal_primes(fixtures):
    z8, d12 = fixtures["Z8"], fixtures["D12"]
    assert names(z8, sp.minimal_primes_over(z8, z8.lattice.bottom)) == {"m"}
    assert names(d12, sp.minimal_primes_over(d12, d12.lattice.bottom)) == {"(2)", "(3)"}
    for ml in fixtures.values():
        for p in sp.primes(ml):
            assert sp.minimal_primes_over(ml, p) == (p,)


def test_lattice_predicates(fixtures):
    b = sp.lattice_predicates(fixtures["B4"])
    assert b.semisimple and b.regular and b.frame
    c = sp.lattice_predicates(fixtures["C3"])
    assert not c.regular and not c.semisimple
    z = sp.lattice_predicates(fixtures["Z8"])
    assert z.quasi_local and z.maximal_count == 1


def test_spectral_invariants_on_corpus(small_corpus, fixtures):
    for ml in list(small_corpus) + list(fixtures.values()):
        lat = ml.lattice
        P = sp.primes(ml)
        M = sp._maximal_or_empty(ml)
        assert M <= P
        for x in range(lat.n):
            rec = sp.classify_element(ml, x)
            if rec.prime:
                assert rec.semiprime and rec.primary and rec.strongly_irreducible
            if rec.strongly_irreducible:
                assert rec.irreducible
            r = sp.radical(ml, x)
            assert lat.le(x, r) and sp.radical(ml, r) == r
            for y in range(lat.n):
                if lat.le(x, y):
                    assert lat.le(r, sp.radical(ml, y))
            if x != lat.top:
                assert any(lat.le(x, m) for m in M)
            for m in M:
                assert lat.le(x, m) == lat.le(ml.product[x][x], m)
        preds = sp.lattice_predicates(ml)
        if preds.regular:
            assert preds.semisimple

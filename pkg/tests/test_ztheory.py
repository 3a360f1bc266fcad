import pytest

import oracle
from zlat import ztheory as zt
from zlat.errors import NotZElement


def names(ml, xs):
    return {ml.lattice.labels[x] for x in xs}


def idx(ml, label):
    return ml.lattice.index(label)


def test_maximal_cover(fixtures):
    d12, z8 = fixtures["D12"], fixtures["Z8"]
    for ml in fixtures.values():
        assert zt.maximal_cover(ml, ml.lattice.top) == (frozenset(), ml.lattice.top)
    Ma, ma = zt.maximal_cover(d12, idx(d12, "(4)"))
    assert names(d12, Ma) == {"(2)"} and d12.lattice.labels[ma] == "(2)"
    Ma, ma = zt.maximal_cover(z8, z8.lattice.bottom)
    assert names(z8, Ma) == {"m"} and z8.lattice.labels[ma] == "m"


def test_z_elements_golden(fixtures):
    assert names(fixtures["D12"], zt.z_elements(fixtures["D12"])) == {"(1)", "(2)", "(3)", "(6)"}
    assert names(fixtures["Z8"], zt.z_elements(fixtures["Z8"])) == {"1", "m"}
    assert names(fixtures["B4"], zt.z_elements(fixtures["B4"])) == {"0", "a", "b", "1"}
    assert names(fixtures["C3"], zt.z_elements(fixtures["C3"])) == {"m", "1"}


@pytest.mark.parametrize("key,build", [
    ("D12", lambda: oracle.zn(12)), ("Z8", oracle.z8), ("B4", oracle.boolean2),
    ("C3", lambda: oracle.chain("0m1")),
])
def test_z_elements_match_oracle(fixtures, key, build):
    labels, leq, prod = build()
    ml = fixtures[key]
    assert names(ml, zt.z_elements(ml)) == oracle.names(labels, oracle.z_elements(leq))
    for a in range(len(labels)):
        assert zt.z_closure(ml, a) == oracle.cz(leq, a)


def test_is_z_examples(fixtures):
    d12, c3 = fixtures["D12"], fixtures["C3"]
    assert zt.is_z_element(d12, idx(d12, "(6)"))
    assert not zt.is_z_element(d12, idx(d12, "(4)"))
    assert not zt.is_z_element(c3, idx(c3, "0"))
    for ml in fixtures.values():
        assert zt.is_z_element(ml, ml.lattice.top)


def test_closure_examples(fixtures):
    d12, z8 = fixtures["D12"], fixtures["Z8"]
    assert d12.lattice.labels[zt.z_closure(d12, d12.lattice.bottom)] == "(6)"
    assert z8.lattice.labels[zt.z_closure(z8, idx(z8, "q"))] == "m"
    for ml in fixtures.values():
        for z in zt.z_elements(ml):
            assert zt.z_closure(ml, z) == z


def test_z_classify_examples(fixtures):
    d12, b4 = fixtures["D12"], fixtures["B4"]
    top = zt.z_classify(d12, d12.lattice.top)
    assert top.strong_z and not top.z_prime
    assert zt.z_classify(d12, idx(d12, "(2)")).z_prime
    six = zt.z_classify(d12, idx(d12, "(6)"))
    assert not six.z_prime and not six.z_irreducible
    a = zt.z_classify(b4, idx(b4, "a"))
    assert a.z_prime and a.z_strongly_irreducible


def test_lattice_z_predicates(fixtures):
    for k in ("C3", "B4"):
        assert zt.is_szi(fixtures[k])
    d = zt.lattice_z_predicates(fixtures["D12"])
    assert not d.szi and d.pz
    assert not zt.is_pz(fixtures["C3"])
    z8 = zt.lattice_z_predicates(fixtures["Z8"])
    assert not z8.szi and not z8.z_product_closed


def test_minimal_z_primes(fixtures):
    got = {k: names(ml, zt.minimal_z_primes(ml)) for k, ml in fixtures.items()}
    assert got["C3"] == {"m"}
    assert got["D12"] == {"(2)", "(3)"}
    assert got["Z8"] == {"m"}
    labels, leq, prod = oracle.zn(12)
    assert got["D12"] == oracle.names(labels, oracle.minimal_z_primes(leq, prod))
    d12 = fixtures["D12"]
    assert names(d12, zt.closed_set_Vz(d12, idx(d12, "(2)"))) == {"(2)"}


def test_decomposition(fixtures):
    d12, b4 = fixtures["D12"], fixtures["B4"]
    assert names(d12, zt.z_irreducible_decomposition(d12, idx(d12, "(6)"))) == {"(2)", "(3)"}
    assert names(b4, zt.z_irreducible_decomposition(b4, b4.lattice.bottom)) == {"a", "b"}
    two = idx(d12, "(2)")
    assert zt.z_irreducible_decomposition(d12, two) == (two,)
    assert zt.z_irreducible_decomposition(d12, d12.lattice.top) == ()
    with pytest.raises(NotZElement):
        zt.z_irreducible_decomposition(d12, idx(d12, "(4)"))


def test_quotient_examples(fixtures):
    d12, z8 = fixtures["D12"], fixtures["Z8"]
    qf = zt.z_quotient(d12)
    p2, p3 = qf.position(idx(d12, "(2)")), qf.position(idx(d12, "(3)"))
    assert d12.lattice.labels[qf.odot[p2][p3]] == "(6)"
    qz = zt.z_quotient(z8)
    pm = qz.position(idx(z8, "m"))
    assert qz.odot[pm][pm] == idx(z8, "m")
    for ml in fixtures.values():
        q = zt.z_quotient(ml)
        assert q.odot == q.wedge
        assert q.as_multiplicative_lattice().is_frame()


def test_three_definitions_agree_on_corpus(small_corpus):
    for ml in small_corpus:
        for x in range(ml.lattice.n):
            assert len(set(zt.z_definitions(ml, x))) == 1


def test_profile_invariants_on_corpus(small_corpus, fixtures):
    for ml in list(small_corpus) + list(fixtures.values()):
        lat = ml.lattice
        for prof in zt.z_profiles(ml):
            assert prof.m_a == lat.meet_all(prof.M_a)
            assert lat.le(prof.element, prof.m_a)
            if prof.z_prime:
                assert prof.z_strongly_irreducible
            if prof.z_strongly_irreducible:
                assert prof.z_irreducible
            if not prof.is_z:
                assert not any(v for k, v in prof.flags().items() if k not in ("strong_z", "basic_z"))

import pytest
from hypothesis import given, strategies as st

from conftest import grid_partitions
from fcy.antichains import Antichain, antichains_below, build_resolution, classify, lowering_antichain
from fcy.homalg import (ChainMap, ComplexError, ProjectiveComplex, apply_nakayama,
                        chain_map_basis, cohomology_dims, compose, degree_term, derived_hom,
                        homotopy_hom_dim, identity, injective_homology, is_null_homotopic,
                        mapping_cone, predicted_hom, projective, stupid_truncation, total_hom)
from fcy.lattice import build_lattice, interval


@pytest.fixture
def P12():
    return build_resolution(Antichain(((0, 2), (1, 1)), (1, 2)))


def test_total_hom_example(P12):
    K = total_hom(P12, interval((0, 1), (0, 2)))
    assert K.dims == {0: 0, 1: 1, 2: 1}
    assert K.cob(1) == [[1]]
    assert cohomology_dims(K) == {0: 0, 1: 0, 2: 0}


def test_derived_hom_examples(P12):
    assert derived_hom(P12, interval((1, 2), (1, 2))) == {0: 1}
    J11 = build_resolution(Antichain(((0,),), (1,)))
    assert derived_hom(J11, interval((0,), (0,))) == {1: 1}
    assert derived_hom(projective((1, 1)), interval((0, 0), (0, 2))) == {}


def test_predicted_hom_examples(P12):
    C = lowering_antichain((1, 2), 2)
    assert predicted_hom(C, interval((1, 2), (1, 2))) == ((), 0)
    assert predicted_hom(Antichain(((0,),), (1,)), interval((0,), (0,))) == (((0,),), 1)
    # two contributing subsets: acyclic
    assert predicted_hom(C, interval((0, 1), (0, 2))) is None


def test_validation():
    with pytest.raises(ComplexError):
        ProjectiveComplex({0: [(0, 2)], 1: [(1, 1)]}, {1: [[1]]}).validate()  # (1,1) !<= (0,2)


def test_null_homotopy_basics(P12):
    idP = identity(P12)
    assert not is_null_homotopic(idP)
    assert is_null_homotopic(idP.scaled(0))
    bad = ChainMap(P12, P12, 0, {0: [[1]]})
    with pytest.raises(ComplexError):
        is_null_homotopic(bad)


def test_homotopy_dims():
    P = projective((1, 1))
    assert homotopy_hom_dim(P, P, 0) == 1
    L = build_lattice(2, 2)
    for t in L.elements:
        for C in antichains_below(L, t):
            P = build_resolution(C)
            fl = classify(C)
            if fl.strong:
                assert homotopy_hom_dim(P, stupid_truncation(P, 1), 0) <= 1
            if fl.boolean:
                # maps out of the truncation into the next term down are its endomorphisms
                for i in range(1, len(C) + 1):
                    T = stupid_truncation(P, i)
                    assert homotopy_hom_dim(T, degree_term(P, i - 1), i) == len(P.term(i - 1))


def test_truncation():
    P = build_resolution(Antichain(((0,),), (1,)))
    assert stupid_truncation(P, 1).degrees == {1: [(0,)]}
    assert stupid_truncation(P, 0).degrees == P.degrees


def test_cone_of_identity_is_acyclic(P12):
    cone = mapping_cone(identity(P12))
    L = build_lattice(2, 2)
    for a in L.elements:
        for b in L.up(a):
            assert derived_hom(cone, interval(a, b)) == {}


def test_nakayama_examples():
    L = build_lattice(1, 1)
    IC = apply_nakayama(build_resolution(Antichain(((0,),), (1,))))
    assert IC.kind == "injective"
    assert injective_homology(IC, L) == {1: {(0,): 1}}
    L2 = build_lattice(2, 2)
    H = injective_homology(apply_nakayama(build_resolution(lowering_antichain((1, 2), 2))), L2)
    assert set(H) == {2}
    assert injective_homology(apply_nakayama(projective((1, 1))), L2) == {0: {(1, 1): 1, (1, 2): 1, (2, 2): 1}}


def test_compose_with_identity(P12):
    for f in chain_map_basis(P12, P12, 0):
        for g in (compose(identity(P12), f), compose(f, identity(P12))):
            assert g.is_chain_map()
            assert is_null_homotopic(g - f)


@given(grid_partitions(max_m=2, max_n=3), st.integers(0, 2))
def test_shift_sign_keeps_complexes(data, s):
    alpha, m, n = data
    P = build_resolution(lowering_antichain(alpha, n))
    Q = P.shifted(s).validate()
    assert Q.support == [d + s for d in P.support]
    assert is_null_homotopic(identity(Q).scaled(0))

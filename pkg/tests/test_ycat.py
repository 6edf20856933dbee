from collections import Counter

import pytest
from hypothesis import given, strategies as st

from fcy.checks import hom_pair_ok, words_from
from fcy.homalg import is_null_homotopic
from fcy.lattice import build_lattice
from fcy.ycat import (HomError, MorphismWord, canonical_factorization, canonical_list,
                      canonical_map, compose_word, coordinate, explicit_lift, hom0_characterizations,
                      hom_degree, hom_oracle, item5_literal, k_min, plain_configurations,
                      presentation, square_types, squares, verify_relation_chainlevel,
                      word_map, zero_relations)

# degree histograms of the oracle over all pairs: {tuple of nonzero degrees: count}
HOM_HISTOGRAMS = {
    (2, 1): {(): 3, (0,): 4, (1,): 2},
    (2, 2): {(): 21, (0,): 8, (1,): 6, (2,): 1},
    (2, 3): {(): 72, (0,): 13, (1,): 12, (2,): 3},
}


@pytest.mark.parametrize("mn", sorted(HOM_HISTOGRAMS))
def test_hom_histograms(mn):
    m, n = mn
    E = build_lattice(m, n).elements
    oracle = Counter(tuple(sorted(hom_oracle(a, b, n))) for a in E for b in E)
    combinatorial = Counter(() if (h := hom_degree(a, b, n)) is None else (h.degree,)
                            for a in E for b in E)
    assert oracle == combinatorial == Counter(HOM_HISTOGRAMS[mn])


def test_hom_degree_examples():
    h = hom_degree((1, 2), (0, 2), 2)
    assert (h.J, h.degree) == ((1,), 1)
    assert hom_degree((1, 2), (1, 2), 2).degree == 0


def test_several_hits_mean_zero():
    # q_() and q_(1) of (1,2) both land in [f(2,2), (2,2)]
    assert hom_degree((1, 2), (2, 2), 2) is None
    assert hom_oracle((1, 2), (2, 2), 2) == {}


def test_item5_needs_the_zero_block_clause():
    # literal interlacing accepts this pair although there is no degree zero map
    assert item5_literal((1, 1), (0, 1)) is True
    assert hom0_characterizations((1, 1), (0, 1), 1) == (False,) * 5


@pytest.mark.parametrize("mn", [(1, 2), (2, 2), (3, 1)])
def test_hom0_equivalence(mn):
    m, n = mn
    E = build_lattice(m, n).elements
    for a in E:
        for b in E:
            assert len(set(hom0_characterizations(a, b, n))) == 1


def test_canonical_factorizations():
    assert canonical_factorization((1, 2), (0, 2), 2) == ((1,), (0, 0))
    assert canonical_factorization((0, 0, 1, 1), (0, 0, 0, 0), 1) == ((2,), (0,))
    with pytest.raises(HomError):
        canonical_factorization((1, 2), (2, 2), 2)
    assert canonical_list((1, 2), (0, 2), 2) == [1]
    assert canonical_list((0, 0, 1, 1), (0, 0, 0, 0), 1) == [-1, 0, 1]


def test_canonical_map():
    phi = canonical_map((1, 2), (0, 2), 2)
    assert phi.is_chain_map()
    assert coordinate(phi, (1, 2), (1,), 2) == 1
    assert not is_null_homotopic(phi)


def test_explicit_lifts_are_chain_maps():
    from fcy.partitions import is_allowed, mutable_set
    from itertools import combinations
    count = 0
    for a in build_lattice(2, 3).elements:
        S = mutable_set(a)
        for k in range(len(S) + 1):
            for J in combinations(S, k):
                if is_allowed(a, J):
                    count += 1
                    phi = explicit_lift(a, J, 3)
                    assert phi.is_chain_map() and not is_null_homotopic(phi)
                else:
                    with pytest.raises(HomError):
                        explicit_lift(a, J, 3)
    assert count > 10


def test_compose_word():
    assert compose_word(MorphismWord((0, 2), (0, 2)), 2, 2) == (1, (2, 0))
    assert compose_word(MorphismWord((1, 2), (1, 0)), 2, 2) is None  # 0 not in R0
    assert compose_word(MorphismWord((1, 3), (3, 1)), 2, 3) == (-1, (1, 3))
    assert k_min((2,), 2, 2) == 1 and k_min((0, 1), 2, 2) == -1


def test_relations_chain_level_j22():
    m, n = 2, 2
    for R in plain_configurations(m, n):
        for k, l in squares(R, m):
            assert verify_relation_chainlevel(R, k, l, m, n)
        for k in zero_relations(R, m):
            assert verify_relation_chainlevel(R, k, None, m, n)


def test_wrong_square_sign_is_detected(monkeypatch):
    import fcy.ycat as y
    # the positive-positive square at (1,3) in J(2,3) anticommutes
    assert y.square_sign(1, 3) == -1
    assert y.verify_relation_chainlevel((1, 3), 1, 3, 2, 3)
    monkeypatch.setattr(y, "square_sign", lambda k, l: 1)
    assert not y.verify_relation_chainlevel((1, 3), 1, 3, 2, 3)


def test_presentation_j11():
    Q = presentation(1, 1, "u").to_json()
    assert Q["vertices"] == ["0", "1"]
    assert Q["arrows"] == [{"id": "u1@1", "src": "1", "tgt": "0"}]
    assert Q["relations"] == []


SQUARE_TYPES = {
    ((2, 3), "u"): {"commuting": 2, "anticommuting": 1, "zero": 6, "other": 0},
    ((2, 3), "v"): {"commuting": 3, "anticommuting": 0, "zero": 6, "other": 0},
    ((2, 3), "w"): {"commuting": 0, "anticommuting": 3, "zero": 6, "other": 0},
    ((3, 3), "u"): {"commuting": 10, "anticommuting": 2, "zero": 12, "other": 0},
    ((3, 3), "v"): {"commuting": 12, "anticommuting": 0, "zero": 12, "other": 0},
    ((3, 3), "w"): {"commuting": 0, "anticommuting": 12, "zero": 12, "other": 0},
}


@pytest.mark.parametrize("key", sorted(SQUARE_TYPES))
def test_square_types(key):
    (m, n), v = key
    assert square_types(presentation(m, n, v)) == SQUARE_TYPES[key]


def test_unknown_variant():
    with pytest.raises(ValueError):
        presentation(2, 2, "x")


pairs_23 = st.tuples(st.sampled_from(build_lattice(2, 3).elements),
                     st.sampled_from(build_lattice(2, 3).elements))


@given(pairs_23)
def test_hom_oracle_agrees(ab):
    assert hom_pair_ok(*ab, 3)


@given(st.sampled_from(plain_configurations(2, 3)), st.integers(1, 3), st.data())
def test_zero_word_law(R, length, data):
    words = list(words_from(R, 2, 3, length))
    if not words:
        return
    w = data.draw(st.sampled_from(words))
    formal = compose_word(MorphismWord(R, w), 2, 3)
    assert is_null_homotopic(word_map(R, w, 2, 3)) == (formal is None)


@pytest.mark.parametrize("mn", [(m, n) for m in range(1, 4) for n in range(0, 4)])
def test_extension_exists_iff_allowed(mn):
    from itertools import combinations
    from fcy.partitions import is_allowed, mutable_set, q

    m, n = mn
    for a in build_lattice(m, n).elements:
        S = mutable_set(a)
        for k in range(len(S) + 1):
            for J in combinations(S, k):
                h = hom_degree(a, q(a, J), n)
                hit = h is not None and h.J == J and h.degree == len(J)
                assert hit == is_allowed(a, J)

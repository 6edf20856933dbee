from math import comb

import pytest

from fcy.auslander import (anticommuting_matches_dual, auslander_self_dual, complement_in,
                           complement_shift, end_tilting_presentation, higher_auslander,
                           self_extension_report, sigma_plus, tilting_matches_auslander,
                           tilting_summands, translate)
from fcy.partitions import PartitionError
from fcy.quiver import presentations_isomorphic, quadratic_dual
from fcy.ycat import presentation

# (vertices, arrows, two-paths, dim relations, dim dual relations)
SHAPES = {
    (2, 1): (3, 2, 1, 1, 0), (2, 2): (4, 3, 2, 2, 0), (3, 0): (3, 2, 1, 0, 1),
    (3, 1): (6, 6, 6, 3, 3), (3, 2): (10, 12, 15, 9, 6), (4, 0): (4, 3, 2, 0, 2),
    (4, 1): (10, 12, 15, 6, 9), (4, 2): (20, 30, 48, 24, 24),
}


def brute_force_arrows(s, d):
    from itertools import combinations
    V = list(combinations(range(1, d + s + 1), d + 1))
    return sum(1 for x in V for y in V
               if len(set(x) - set(y)) == 1 and (set(y) - set(x)).pop() == (set(x) - set(y)).pop() + 1)


@pytest.mark.parametrize("sd", sorted(SHAPES))
def test_shapes(sd):
    s, d = sd
    Q = higher_auslander(s, d)
    shape = (len(Q.vertices), len(Q.arrows), len(Q.two_paths()), Q.relation_dim(),
             quadratic_dual(Q).relation_dim())
    assert shape == SHAPES[sd]
    assert shape[0] == comb(d + s, d + 1)
    assert shape[1] == brute_force_arrows(s, d)
    assert shape[3] + shape[4] == shape[2]


def test_sigma_plus():
    assert sigma_plus((1, 3), 1, 4) == (2, 3)
    assert sigma_plus((1, 2), 1, 4) is None
    assert sigma_plus((1, 4), 4, 4) is None


def test_vertex_maps():
    assert complement_shift((-1, 2), 2, 2) == (2, 3)  # {0, 1} + 2
    with pytest.raises(PartitionError):
        complement_shift((-2, 0), 2, 2)
    assert translate((-1, 2), 2) == (1, 4)
    assert complement_in((1, 3), 4) == (2, 4)


def test_summand_shifts():
    T = {t.alpha: t for t in tilting_summands(2, 2)}
    assert T[(1, 2)].kappa == 3 and T[(1, 2)].shift == -3
    assert T[(0, 0)].shift == 0


@pytest.mark.parametrize("mn", [(1, 1), (2, 2), (2, 3)])
def test_no_self_extensions(mn):
    rep = self_extension_report(*mn)
    assert rep["holds"] and rep["nonzero_homs"] > 0


def test_unshifted_summands_do_have_extensions():
    # without the shifts, (1,2) -> (0,2) is an extension in degree 1
    from fcy.ycat import hom_degree
    assert hom_degree((1, 2), (0, 2), 2).degree == 1


@pytest.mark.parametrize("mn", [(1, 1), (2, 2), (2, 3)])
def test_tilting_comparisons(mn):
    assert end_tilting_presentation(*mn).orientation == "alg"
    assert tilting_matches_auslander(*mn)
    assert anticommuting_matches_dual(*mn)


def test_plain_generators_need_rescaling():
    m, n = 2, 3
    vm = lambda R: complement_shift(R, m, n)
    A = higher_auslander(m + 1, n - 1)
    assert not presentations_isomorphic(presentation(m, n, "u"), A, vm)
    assert presentations_isomorphic(presentation(m, n, "u"), A, vm, modulate_signs=True)
    D = quadratic_dual(higher_auslander(n + 1, m - 1))
    assert not presentations_isomorphic(presentation(m, n, "v"), D, lambda R: translate(R, m))


@pytest.mark.parametrize("sd", [(3, 1), (4, 1), (3, 2)])
def test_self_duality(sd):
    s, d = sd
    assert auslander_self_dual(s, d)
    plain = presentations_isomorphic(higher_auslander(s, d),
                                     quadratic_dual(higher_auslander(d + 2, s - 2)),
                                     lambda x: complement_in(x, d + s))
    assert not plain  # the signs have to be modulated


def test_bad_parameters():
    with pytest.raises(ValueError):
        higher_auslander(0, 1)

import random

import pytest

from wknots.rational import rat
from wknots.arrows import (LONG, strands, ArrowVector, canonical_long,
                           generate_relations)
from wknots.jacobi import concat
from wknots.lieweights import (LieData, lie_from_text, lie_validate,
                               lie_abelian, lie_nonabelian2, lie_sl2,
                               PBWElement, pbw_normalize, pbw_mul,
                               weight_system)

SL2_TEXT = """\
dim=3
c[1,2,2]=2
c[2,1,2]=-2
c[1,3,3]=-2
c[3,1,3]=2
c[2,3,1]=1
c[3,2,1]=-1
"""


def test_fixtures_validate():
    for L in (lie_abelian(1), lie_abelian(3), lie_nonabelian2(), lie_sl2()):
        assert lie_validate(L)


def test_text_parsing():
    L = lie_from_text(SL2_TEXT)
    assert L.r == 3
    assert L.bracket(1, 2) == {2: rat(2)}
    assert L.bracket(2, 3) == {1: rat(1)}
    assert lie_validate(L)


def test_invalid_constants_rejected():
    # missing antisymmetric partner
    L = LieData(2, {(1, 2): {2: 1}})
    assert not lie_validate(L)
    # Jacobi violation
    L = LieData(3, {(1, 2): {3: 1}, (2, 1): {3: -1},
                    (2, 3): {2: 1}, (3, 2): {2: -1},
                    (1, 3): {1: 1}, (3, 1): {1: -1}})
    assert not lie_validate(L)


def test_pbw_straightening_sl2():
    L = lie_sl2()
    # x2 x1 = x1 x2 - [x1, x2] = x1 x2 - 2 x2
    out = pbw_normalize({(("x", 2), ("x", 1)): rat(1)}, L)
    assert out.terms == {(("x", 1), ("x", 2)): rat(1),
                         (("x", 2),): rat(-2)}


def test_pbw_straightening_semidirect():
    L = lie_nonabelian2()  # [x1, x2] = x2
    # x1 phi^2 = phi^2 x1 + [x1, phi^2] = phi^2 x1 - phi^2
    out = pbw_normalize({(("x", 1), ("p", 2)): rat(1)}, L)
    assert out.terms == {(("p", 2), ("x", 1)): rat(1),
                         (("p", 2),): rat(-1)}
    # duals commute with each other
    out = pbw_normalize({(("p", 2), ("p", 1)): rat(1)}, L)
    assert out.terms == {(("p", 1), ("p", 2)): rat(1)}


def test_single_arrow_image():
    L = lie_abelian(2)
    v = ArrowVector(LONG, 1, {canonical_long(((1, 2),)): rat(1)})
    out = weight_system(v, L)
    assert out.terms == {(("p", 1), ("x", 1)): rat(1),
                         (("p", 2), ("x", 2)): rat(1)}


def test_reversed_arrow_needs_straightening():
    L = lie_nonabelian2()
    v = ArrowVector(LONG, 1, {canonical_long(((2, 1),)): rat(1)})
    out = weight_system(v, L)
    # x_i phi^i summed over i: straightening adds the coadjoint correction
    assert out.terms[(("p", 1), ("x", 1))] == rat(1)
    assert out.terms[(("p", 2), ("x", 2))] == rat(1)
    assert out.terms.get((("p", 2),), rat(0)) != rat(0) or \
        out.terms.get((("p", 1),), rat(0)) != rat(0)


def test_relators_vanish_all_fixtures():
    fixtures = ((lie_abelian(2), 3), (lie_nonabelian2(), 3), (lie_sl2(), 2))
    for L, mmax in fixtures:
        for skel in (LONG, strands(3)):
            for m in range(1, mmax + 1):
                for vec in generate_relations(skel, m, {"TC", "4T"}):
                    assert weight_system(vec, L).is_zero()


def test_weight_system_multiplicative():
    rng = random.Random(41)
    for L in (lie_nonabelian2(), lie_sl2()):
        for _ in range(8):
            def rnd(m):
                slots = list(range(1, 2 * m + 1))
                rng.shuffle(slots)
                return canonical_long(tuple(
                    (slots[2 * i], slots[2 * i + 1]) for i in range(m)))
            mu, mv = rng.randrange(1, 3), rng.randrange(1, 3)
            u = ArrowVector(LONG, mu, {rnd(mu): rat(1)})
            v = ArrowVector(LONG, mv, {rnd(mv): rat(1)})
            lhs = weight_system(concat(u, v), L)
            rhs = pbw_mul(weight_system(u, L), weight_system(v, L), L)
            assert lhs == rhs


def test_invalid_algebra_rejected_by_weight_system():
    bad = LieData(2, {(1, 2): {2: 1}})
    v = ArrowVector(LONG, 1, {canonical_long(((1, 2),)): rat(1)})
    with pytest.raises(ValueError):
        weight_system(v, bad)

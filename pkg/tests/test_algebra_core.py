import random

from fractions import Fraction

import pytest

from wknots.rational import rat
from wknots.rings import (LaurentPoly, TruncSeries, laurent_normalize,
                          series_exp, series_log)
from wknots.linalg import SparseEchelon, RatMatrix, det_series


def test_laurent_normalize_examples():
    p = LaurentPoly({1: 1, 0: -1, -1: 1})  # X - 1 + X^-1
    assert laurent_normalize(p) == LaurentPoly({0: 1, 1: -1, 2: 1})
    assert laurent_normalize(LaurentPoly({0: 1})) == LaurentPoly({0: 1})
    assert laurent_normalize(LaurentPoly({3: -1})) == LaurentPoly({0: 1})


def test_laurent_normalize_zero_rejected():
    with pytest.raises(ValueError):
        laurent_normalize(LaurentPoly({}))


def test_laurent_normalize_unit_orbit():
    rng = random.Random(5)
    for _ in range(50):
        p = LaurentPoly({e: rng.randrange(-4, 5)
                         for e in range(rng.randrange(1, 5))})
        if p.is_zero():
            continue
        base = laurent_normalize(p)
        for k in (-2, 1, 3):
            for sgn in (1, -1):
                q = p * LaurentPoly({k: sgn})
                assert laurent_normalize(q) == base
        assert laurent_normalize(base) == base


def test_series_exp_taylor():
    x = TruncSeries.x(3)
    e = series_exp(x)
    assert [e[k] for k in range(4)] == [rat(1), rat(1), rat(Fraction(1, 2)),
                                        rat(Fraction(1, 6))]


def test_series_log_mercator():
    s = TruncSeries.const(3, 1) + TruncSeries.x(3)
    l = series_log(s)
    assert [l[k] for k in range(4)] == [rat(0), rat(1),
                                        rat(Fraction(-1, 2)),
                                        rat(Fraction(1, 3))]


def test_exp_log_round_trips():
    rng = random.Random(11)
    for _ in range(20):
        d = rng.randrange(2, 7)
        s = TruncSeries(d, {k: rat(rng.randrange(-3, 4))
                            for k in range(1, d + 1)})
        assert series_log(series_exp(s)) == s
        u = TruncSeries.const(d, 1) + s
        assert series_exp(series_log(u)) == u


def test_series_domain_errors():
    with pytest.raises(ValueError):
        series_exp(TruncSeries.const(3, 1))
    with pytest.raises(ValueError):
        series_log(TruncSeries.x(3))


def test_ring_axioms_randomized():
    rng = random.Random(7)
    for _ in range(30):
        ps = [LaurentPoly({e: rng.randrange(-3, 4) for e in
                           range(rng.randrange(-2, 1), rng.randrange(1, 4))})
              for _ in range(3)]
        a, b, c = ps
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        d = 4
        ss = [TruncSeries(d, {k: rat(rng.randrange(-3, 4))
                              for k in range(d + 1)}) for _ in range(3)]
        a, b, c = ss
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def _oracle_rank(rows, dim):
    """Fraction-free Gaussian elimination over integers."""
    mat = [[int(r.get(c, 0)) for c in range(dim)] for r in rows]
    rank, prev = 0, 1
    for col in range(dim):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            for j in range(col + 1, dim):
                mat[i][j] = (mat[rank][col] * mat[i][j]
                             - mat[i][col] * mat[rank][j]) // prev
            mat[i][col] = 0
        prev = mat[rank][col]
        rank += 1
    return rank


def test_echelon_rank_against_fraction_free_oracle():
    rng = random.Random(3)
    dim = 20
    rows = []
    for _ in range(100):
        rows.append({c: rat(rng.randrange(-2, 3))
                     for c in rng.sample(range(dim), 4)})
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    ech = SparseEchelon()
    for r in rows:
        ech.add(dict(r))
    assert ech.rank == _oracle_rank(rows, dim)
    for r in rows:
        assert not ech.reduce(dict(r))


def test_echelon_rank_order_invariant():
    rng = random.Random(4)
    rows = [{c: rat(rng.randrange(-2, 3)) for c in rng.sample(range(8), 3)}
            for _ in range(15)]
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    ranks = set()
    for _ in range(5):
        rng.shuffle(rows)
        ech = SparseEchelon()
        for r in rows:
            ech.add(dict(r))
        ranks.add(ech.rank)
    assert len(ranks) == 1


def test_det_series_examples():
    one = TruncSeries.const(2, 1)
    x = TruncSeries.x(2)
    zero = TruncSeries.const(2, 0)
    assert det_series(RatMatrix([]), cap=2) == one
    ident = RatMatrix([[one, zero, zero], [zero, one, zero],
                       [zero, zero, one]])
    assert det_series(ident) == one
    m = RatMatrix([[one + x, x], [x, one - x]])
    assert det_series(m) == one - x * x - x * x

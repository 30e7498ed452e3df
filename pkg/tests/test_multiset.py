import random

import pytest

from bettiforge.multiset import IntMultiset

ms = IntMultiset.from_values


def test_canonical_form():
    assert ms([6, 6, 6]).entries == ((6, 3),)
    assert ms([10, 6, 10]).entries == ((6, 1), (10, 2))
    assert ms([]) == IntMultiset.empty()
    assert ms([3, 6, 6, 6]) == ms([6, 3, 6, 6])


def test_invalid_entries_rejected():
    with pytest.raises(ValueError):
        IntMultiset(((3, 0),))
    with pytest.raises(ValueError):
        IntMultiset(((5, 1), (4, 1)))


def test_intersect():
    assert ms([6, 6, 6]).intersect(ms([6, 10, 10])) == ms([6])
    assert ms([5, 5, 9]).intersect(ms([6, 10, 10])) == ms([])
    assert ms([7]).intersect(ms([8, 9, 10])) == ms([])


def test_union_sum_diff():
    assert ms([9, 9]).sum(ms([10])) == ms([9, 9, 10])
    assert ms([9, 9]).union(ms([9, 10])) == ms([9, 9, 10])
    m = ms([2, 5, 5, 7])
    assert m.diff(m) == ms([])
    assert ms([5, 5, 9]).diff(ms([5])) == ms([5, 9])
    assert (ms([1, 2]) + ms([2, 3])) == ms([1, 2, 2, 3])
    assert (ms([1, 2, 2, 3]) - ms([2])) == ms([1, 2, 3])


def test_submultiset():
    assert ms([9, 11, 11, 11]).is_submultiset(ms([9, 9, 9, 11, 11, 11, 13]))
    assert not ms([9, 9, 9, 9]).is_submultiset(ms([9, 9, 9, 11, 11, 11, 13]))
    assert ms([]) <= ms([1])


def test_affine():
    assert ms([12, 12, 12, 14]).affine(19, -1) == ms([5, 7, 7, 7])
    m = ms([2, 5, 5, 7])
    assert m.affine(0, 1) == m
    assert ms([5, 5]).affine(15, -1) == ms([10, 10])
    # negatives are fine: twist slots of bordered presentations go below zero
    assert ms([8]).affine(5, -1) == ms([-3])


def test_norm_card():
    assert ms([3, 6, 6, 6]).norm() == 21
    assert ms([]).norm() == 0
    assert ms([5, 5, 5, 7, 7, 7, 9]).card() == 7
    assert len(ms([5, 5])) == 2


def test_queries():
    m = ms([-3, 2, 2, 2, 8])
    assert m.multiplicity(2) == 3 and m.multiplicity(5) == 0
    assert m.support() == (-3, 2, 8)
    assert m.min() == -3 and m.max() == 8
    assert 8 in m and 5 not in m
    assert list(m) == [-3, 2, 2, 2, 8]
    assert m.to_list() == [-3, 2, 2, 2, 8]
    assert str(m) == "{{-3,2,2,2,8}}"
    with pytest.raises(ValueError):
        ms([]).min()


def test_dual_symmetry_property():
    # H = M & (n - M) satisfies mu_H(x) == mu_H(n - x) for every x
    rng = random.Random(42)
    for _ in range(300):
        m = ms([rng.randint(-10, 15) for _ in range(rng.randint(0, 12))])
        n = rng.randint(-8, 20)
        h = m.intersect(m.affine(n, -1))
        for x in h.support():
            assert h.multiplicity(x) == h.multiplicity(n - x)


def test_sum_is_commutative_associative():
    rng = random.Random(7)
    for _ in range(100):
        a = ms([rng.randint(0, 8) for _ in range(rng.randint(0, 6))])
        b = ms([rng.randint(0, 8) for _ in range(rng.randint(0, 6))])
        c = ms([rng.randint(0, 8) for _ in range(rng.randint(0, 6))])
        assert a.sum(b) == b.sum(a)
        assert a.sum(b).sum(c) == a.sum(b.sum(c))


def test_submultiset_recovers_complement():
    rng = random.Random(11)
    for _ in range(100):
        n = ms([rng.randint(0, 8) for _ in range(rng.randint(0, 8))])
        picks = [v for v in n.values() if rng.random() < 0.5]
        m = ms(picks)
        assert m.is_submultiset(n)
        assert n == m.sum(n.diff(m))


def test_affine_involution():
    rng = random.Random(13)
    for _ in range(100):
        m = ms([rng.randint(-5, 12) for _ in range(rng.randint(0, 8))])
        n = rng.randint(-4, 10)
        assert m.affine(n, -1).affine(n, -1) == m

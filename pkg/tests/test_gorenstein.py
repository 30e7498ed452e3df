import random

import pytest

from bettiforge.gorenstein import (
    GorensteinBetti,
    cancel_duals,
    check_gorenstein_betti,
    ci_index_sets,
    hilbert_from_resolution,
    initial_degree,
    koszul_modules,
    max_new_generators,
    mci,
    random_admissible,
)
from bettiforge.multiset import IntMultiset

ms = IntMultiset.from_values


def corpus(seed, size):
    rng = random.Random(seed)
    return [random_admissible(rng) for _ in range(size)]


# ----------------------------------------------------------------------
# admissibility
# ----------------------------------------------------------------------


def test_admissible_five_quadrics():
    v = check_gorenstein_betti(ms([2, 2, 2, 2, 2]))
    assert v.admissible and v.theta == 5


def test_admissible_seven_generators():
    v = check_gorenstein_betti(ms([5, 5, 5, 7, 7, 7, 9]))
    assert v.admissible and v.theta == 15


def test_rejected_non_integral_theta():
    v = check_gorenstein_betti(ms([1, 1, 1, 1, 1]))
    assert not v.admissible and "not an integer" in v.reason


def test_rejected_even_cardinality():
    v = check_gorenstein_betti(ms([2, 2, 2, 2]))
    assert not v.admissible and "odd" in v.reason


def test_rejected_gaeta_diesel_inequality():
    # theta = 6 but h_2 + h_5 = 6 is not strictly below it
    v = check_gorenstein_betti(ms([2, 2, 2, 2, 4]))
    assert not v.admissible and v.theta == 6 and "<=" in v.reason


def test_rejected_nonpositive_degree():
    v = check_gorenstein_betti(ms([0, 2, 4]))
    assert not v.admissible and "positive" in v.reason


def test_betti_type_invariants():
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    assert b.theta == 5
    assert b.syzygies() == ms([3, 3, 3, 3, 3])
    assert b.modules()[2] == ms([5])
    with pytest.raises(ValueError):
        GorensteinBetti(ms([2, 2, 2, 2, 2]), 6)
    with pytest.raises(ValueError):
        GorensteinBetti.from_gens(ms([1, 1, 1, 1, 1]))


# ----------------------------------------------------------------------
# mci and index sets
# ----------------------------------------------------------------------


def test_mci_via_c_set():
    b = GorensteinBetti.from_gens(ms([5, 5, 5, 7, 7, 7, 9]))
    big_b, big_c, _ = ci_index_sets(b)
    assert big_b == () and big_c == (4,)
    assert tuple(mci(b)) == (5, 5, 7)


def test_mci_all_empty():
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    big_b, big_c, b_bar = ci_index_sets(b)
    assert big_b == () and big_c == () and b_bar == ()
    assert tuple(mci(b)) == (2, 2, 2)


def test_mci_minimal_case():
    b = GorensteinBetti.from_gens(ms([1, 1, 1]))
    assert b.theta == 3
    assert tuple(mci(b)) == (1, 1, 1)


def test_mci_via_b_set():
    # 5 + 8 = 13 = theta puts index 3 into B
    b = GorensteinBetti.from_gens(ms([2, 4, 5, 7, 8]))
    big_b, _, _ = ci_index_sets(b)
    assert big_b == (3,)
    assert tuple(mci(b)) == (2, 5, 8)


def test_mci_rejects_inadmissible():
    with pytest.raises(ValueError):
        mci(GorensteinBetti(ms([2, 2, 2, 2, 4]), 6))


def test_mci_monotone_under_dual_pair_deletion():
    # deleting a generator pair (s, theta-s) never increases mci
    b = GorensteinBetti.from_gens(ms([2, 4, 5, 7, 8]))
    reduced = GorensteinBetti(ms([2, 4, 7]), b.theta)
    assert reduced.is_admissible()
    assert all(x <= y for x, y in zip(mci(reduced), mci(b)))


def test_bvuoto_on_corpus():
    for b in corpus(31, 150):
        big_b, _, b_bar = ci_index_sets(b)
        n = (b.gens.card() - 1) // 2
        if not big_b:
            assert set(b_bar) <= {n + 2}


# ----------------------------------------------------------------------
# Hilbert functions
# ----------------------------------------------------------------------


def test_hilbert_residue_field():
    h = hilbert_from_resolution(koszul_modules([1, 1, 1]), 3)
    assert h.values == (1,)


def test_hilbert_five_quadrics():
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    h = hilbert_from_resolution(b.modules(), 3)
    assert h.values == (1, 3, 1)


def test_hilbert_ci_length_is_product():
    h = hilbert_from_resolution(koszul_modules([2, 2, 8]), 3)
    assert h.length() == 2 * 2 * 8


def test_hilbert_rejects_non_artinian():
    with pytest.raises(ValueError, match="Artinian"):
        hilbert_from_resolution([ms([1])], 3)


def test_hilbert_handles_negative_twists():
    # bordered pair (8, -3) added to both levels cancels out of H
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    padded = [
        b.gens.sum(ms([8, -3])),
        b.syzygies().sum(ms([8, -3])),
        ms([5]),
    ]
    assert hilbert_from_resolution(padded, 3).values == (1, 3, 1)


def test_hilbert_symmetry_on_corpus():
    for b in corpus(37, 100):
        h = hilbert_from_resolution(b.modules(), 3)
        socle = b.theta - 3
        assert h.socle_degree() == socle
        for k in range(socle + 1):
            assert h.value(k) == h.value(socle - k)


def test_mng_examples():
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    h = hilbert_from_resolution(b.modules(), 3)
    assert initial_degree(h) == 2
    assert max_new_generators(h, 3) == -1
    from bettiforge.gorenstein import HilbertFn

    sym = HilbertFn((1, 3, 6, 6, 3, 1))
    assert max_new_generators(sym, 4) == -(3 - 2 * 6 + 6)
    with pytest.raises(ValueError, match="mng undefined"):
        max_new_generators(h, 2)


def test_bc_clauses_on_corpus():
    # mu_D(d_i) against -delta^2 H(d_i) under the B-bar / C index conditions
    for b in corpus(41, 150):
        h = hilbert_from_resolution(b.modules(), 3)
        d = b.gens.values()
        _, big_c, b_bar = ci_index_sets(b)
        for i in b_bar:  # clause (a)
            assert b.gens.multiplicity(d[i - 1]) == -h.delta2(d[i - 1])
        for i in b_bar:  # clause (c)
            for j in b_bar:
                if d[i - 1] == d[j - 1]:
                    assert i == j
        for i in big_c:  # clause (b), only under its stated preconditions
            if i not in b_bar and (i - 1) not in b_bar:
                assert b.gens.multiplicity(d[i - 1]) == -h.delta2(d[i - 1]) - 1
        n = (b.gens.card() - 1) // 2
        # clauses (d) and (e); their syzygy-counting arguments index
        # d_{2n+4-k} resp. d_{2n+5-k}, so they only speak for k inside the
        # Bbar resp. C index ranges
        for i in range(1, 2 * n + 2):
            k = next(j for j in range(1, 2 * n + 2) if d[j - 1] == d[i - 1])
            if b.gens.multiplicity(d[i - 1]) == -h.delta2(d[i - 1]) and k >= 3:
                assert k in b_bar
            if (
                b.gens.multiplicity(d[i - 1]) == -h.delta2(d[i - 1]) - 1
                and 4 <= k <= n + 2
            ):
                assert k in big_c


# ----------------------------------------------------------------------
# dual-pair cancellation
# ----------------------------------------------------------------------


def test_cancel_duals_minimal_fixed_point():
    b = GorensteinBetti.from_gens(ms([2, 2, 2, 2, 2]))
    assert cancel_duals(b.gens, b.syzygies(), 5) == (b.gens, b.syzygies())


def test_cancel_duals_protected_pair_retained():
    # bordered presentation of the five-points quotient: the (8, -3) pair
    # sits at dual degrees, so the excess criterion cannot remove it
    gens = ms([-3, 2, 2, 2, 2, 2, 8])
    syz = ms([-3, 3, 3, 3, 3, 3, 8])
    assert cancel_duals(gens, syz, 5) == (gens, syz)


def test_cancel_duals_removes_asymmetric_ghost():
    gens = ms([2, 2, 2, 2, 2, 3])
    syz = ms([3, 3, 3, 3, 3, 3])
    out = cancel_duals(gens, syz, 5)
    assert out == (ms([2, 2, 2, 2, 2]), ms([3, 3, 3, 3, 3]))


def test_cancel_duals_iterates():
    gens = ms([2, 2, 2, 2, 2, 3, 3, 4])
    syz = ms([3, 3, 3, 3, 3, 3, 3, 4])
    out0, out1 = cancel_duals(gens, syz, 5)
    inter = out0.intersect(out1)
    for v in inter.support():
        assert inter.multiplicity(v) == inter.multiplicity(5 - v)


def test_cancel_duals_rank_mismatch():
    with pytest.raises(ValueError):
        cancel_duals(ms([2, 2]), ms([3]), 5)


# ----------------------------------------------------------------------
# corpus sampler
# ----------------------------------------------------------------------


def test_random_admissible_is_deterministic_and_varied():
    a = corpus(99, 40)
    b = corpus(99, 40)
    assert [x.gens for x in a] == [y.gens for y in b]
    sizes = {x.gens.card() for x in a}
    assert len(sizes) >= 3
    for x in a:
        assert x.is_admissible()

import random
from math import comb

import pytest

from hermsos import (
    HoloMap,
    HoloPoly,
    check_affine_norm_product,
    check_gap_feasible,
    check_homogeneous_norm_product,
    check_min_embedding_dim,
    check_modification_rank,
    check_norm_product,
    check_power_rank,
    check_rational_modification_rank,
    extremal_lower,
    extremal_power_lower,
    gap_intervals,
    inertia,
    norm_form,
    prime_substitution,
    random_map,
    reduce_minimal,
    substitute_powers,
    verify_injective,
)


def test_modification_rank_bands():
    rep = check_modification_rank(2, 1, 4)
    assert (rep.lower, rep.upper, rep.satisfied) == (4, 5, True)
    rep = check_modification_rank(2, 2, 9)
    assert (rep.lower, rep.upper, rep.satisfied) == (5, 8, False)
    # above the diagonal the lower bound is max(n(n+3)/2, d) with no ceiling
    rep = check_modification_rank(1, 3, 2)
    assert (rep.lower, rep.upper, rep.satisfied) == (3, None, False)
    rep = check_modification_rank(1, 3, 3)
    assert rep.satisfied
    rep = check_modification_rank(2, 7, 7)
    assert (rep.lower, rep.upper, rep.satisfied) == (7, None, True)
    assert rep.theorem == "thm1.1"
    assert rep.inputs == {"n": 2, "d": 7, "m": 7}
    with pytest.raises(ValueError):
        check_modification_rank(0, 1, 1)


def test_gap_intervals_frozen_lists():
    assert gap_intervals(2) == [(0, 4)]
    assert gap_intervals(5) == [(0, 10), (11, 14)]
    assert gap_intervals(10) == [(0, 20), (21, 29), (32, 37), (43, 44)]


def test_gap_intervals_last_k():
    # gap k is nonempty exactly when n > k(k+3)/2
    for n in range(1, 40):
        gaps = gap_intervals(n)
        ks = [k for k in range(1, n + 2) if n > k * (k + 3) // 2]
        assert len(gaps) == 1 + len(ks)
        for k, (lo, hi) in zip(ks, gaps[1:]):
            assert lo == n * (k + 1) + k
            assert hi == n * (k + 2) - k * (k + 1) // 2


def test_gap_feasible_matches_intervals():
    for n in (2, 3, 5, 10):
        gaps = gap_intervals(n)
        for m in range(1, 130):
            in_gap = any(lo < m < hi for lo, hi in gaps)
            assert check_gap_feasible(n, m).satisfied == (not in_gap), (n, m)


def test_gap_feasible_reports():
    rep = check_gap_feasible(5, 12)
    assert not rep.satisfied
    assert rep.inputs["d"] == 2
    assert (rep.lower, rep.upper) == (14, 17)
    rep = check_gap_feasible(5, 11)
    assert rep.satisfied
    rep = check_gap_feasible(10, 121)
    assert rep.satisfied
    assert rep.upper is None


def test_rational_modification_rank():
    rep = check_rational_modification_rank(4, 1, 8, 1, 1)
    assert (rep.lower, rep.upper, rep.satisfied) == (8, 9, True)
    rep = check_rational_modification_rank(4, 1, 2, 1, 1)
    assert not rep.satisfied
    # square-root case from the one-variable family: reduces to m >= 1
    rep = check_rational_modification_rank(1, 6, 5, 2, 2)
    assert rep.lower == 1
    assert rep.upper is None
    assert rep.satisfied
    # a = 2 shrinks the interval: the binomial sum grows quadratically
    rep = check_rational_modification_rank(4, 1, 3, 2, 1)
    assert rep.lower == 3  # 3 + C(4,2) = 9 >= 8
    assert rep.upper == 4  # floor(9 / 2)
    assert rep.satisfied


def test_homogeneous_norm_product():
    rep = check_homogeneous_norm_product(2, 1, 3)
    assert (rep.lower, rep.upper, rep.satisfied) == (3, 3, True)
    rep = check_homogeneous_norm_product(2, 4, 5)
    assert (rep.lower, rep.upper, rep.satisfied) == (6, None, False)


def test_norm_product():
    rep = check_norm_product(2, 1, 2)
    assert (rep.lower, rep.upper, rep.satisfied) == (2, 2, True)
    rep = check_norm_product(2, 3, 3)
    assert (rep.lower, rep.upper, rep.satisfied) == (3, None, True)
    rep = check_norm_product(3, 4, 5)
    assert (rep.lower, rep.upper) == (6, None)
    assert not rep.satisfied


def test_affine_norm_product():
    rep = check_affine_norm_product(2, 1, 4)
    assert (rep.lower, rep.upper, rep.satisfied) == (4, 5, True)
    rep = check_affine_norm_product(2, 2, 5)
    assert (rep.lower, rep.upper, rep.satisfied) == (5, 8, True)
    rep = check_affine_norm_product(2, 3, 4)
    assert (rep.lower, rep.upper, rep.satisfied) == (5, None, False)


def test_power_rank_bounds():
    rep = check_power_rank(2, 2, 4)
    assert (rep.lower, rep.upper, rep.satisfied) == (4, 5, True)
    rep = check_power_rank(2, 2, 6)
    assert not rep.satisfied
    rep = check_power_rank(3, 3, 9)
    assert rep.lower == 9
    assert rep.upper == 3 + comb(4, 2) + comb(5, 3)


def test_min_embedding_dim():
    for n in (1, 2, 5, 12):
        for m in range(1, 30):
            rep = check_min_embedding_dim(n, m)
            assert rep.lower == n
            assert rep.satisfied == (m >= n)


def test_prime_substitution_known():
    assert prime_substitution(2, 2) == (3, 5)
    assert prime_substitution(3, 2) == (11, 39, 65)
    assert prime_substitution(1, 5) == (1,)


def test_prime_substitution_injective():
    for n in range(1, 5):
        for t in range(1, 5):
            exps = prime_substitution(n, t)
            assert verify_injective(exps, n, t)
    assert not verify_injective((1, 1), 2, 1)


def test_substitute_powers_preserves_rank():
    rng = random.Random(3001)
    for _ in range(10):
        n = rng.choice((2, 3))
        t = rng.randint(1, 3)
        f = random_map(rng, n, rng.randint(1, 3), t, 3)
        exps = prime_substitution(n, t)
        collapsed = substitute_powers(f, exps)
        assert reduce_minimal(collapsed)[1] == reduce_minimal(f)[1]
        assert inertia(norm_form(collapsed)).rank == len(f)


def test_extremal_witnesses():
    f = extremal_lower(3, 2)
    assert len(f) == 2
    assert f.n == 3
    assert f.components[0] == HoloPoly.variable(3, 0)
    with pytest.raises(ValueError):
        extremal_lower(2, 3)
    g = extremal_power_lower(3)
    assert g.n == 1
    assert [c.degree for c in g.components] == [1, 2, 3]


def test_report_shape():
    rep = check_power_rank(1, 1, 1)
    assert rep.theorem == "prop2.5"
    assert rep.observed == 1
    assert isinstance(rep.inputs, dict)

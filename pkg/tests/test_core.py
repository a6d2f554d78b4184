from collections import Counter
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rif.core import (
    degree_profile,
    diversity,
    inner_distribution,
    irregularity_ratio,
    is_intersecting,
    is_regular,
    is_subset_regular,
    make_family,
    max_pairwise_meet,
    meet_profile,
)
from rif.errors import (
    DuplicateSet,
    ElementOutOfRange,
    EmptyFamily,
    InvalidParameters,
    InvalidS,
    WrongProbeSize,
    WrongSetSize,
    ZeroMinDegree,
)


@st.composite
def families(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n))
    pool = list(combinations(range(1, n + 1), k))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=min(25, len(pool)), unique=True))
    return make_family(n, k, chosen)


# brute-force oracles on plain Python sets


def bf_intersecting(sets):
    return all(set(a) & set(b) for a, b in combinations(sets, 2))


def bf_degrees(n, sets):
    c = Counter(x for s in sets for x in s)
    return tuple(c[x] for x in range(1, n + 1))


def test_make_family_canonicalises():
    fam = make_family(5, 2, [[3, 1], (5, 4), {2, 1}])
    assert fam.sets == ((1, 2), (1, 3), (4, 5))
    assert not fam.masks.flags.writeable
    assert (2, 1) in fam and (1, 4) not in fam


@pytest.mark.parametrize(
    "sets, err",
    [
        ([(1, 2, 3)], WrongSetSize),
        ([(1, 1)], WrongSetSize),
        ([(0, 1)], ElementOutOfRange),
        ([(1, 6)], ElementOutOfRange),
        ([(1, 2), (2, 1)], DuplicateSet),
    ],
)
def test_make_family_rejects(sets, err):
    with pytest.raises(err):
        make_family(5, 2, sets)


def test_make_family_bad_parameters():
    with pytest.raises(InvalidParameters):
        make_family(3, 4, [])


def test_fano_basics(fano):
    assert is_intersecting(fano)
    assert is_regular(fano) == (True, 3)
    assert degree_profile(fano).degrees == (3,) * 7
    assert irregularity_ratio(fano) == 1
    assert diversity(fano) == 4
    assert is_subset_regular(fano, 2) == (True, 1)
    assert is_subset_regular(fano, 3) == (False, None)
    assert max_pairwise_meet(fano) == 1
    assert inner_distribution(fano).a == (1, 0, 6, 0)


def test_star_is_not_regular():
    star = make_family(5, 2, [(1, x) for x in range(2, 6)])
    assert is_intersecting(star)
    assert is_regular(star) == (False, None)
    assert irregularity_ratio(star) == 4
    assert diversity(star) == 0


def test_uncovered_element():
    fam = make_family(4, 2, [(1, 2), (1, 3)])
    with pytest.raises(ZeroMinDegree):
        irregularity_ratio(fam)


def test_empty_family_errors():
    empty = make_family(4, 2, [])
    assert is_intersecting(empty)
    for fn in (is_regular, diversity, inner_distribution, irregularity_ratio):
        with pytest.raises(EmptyFamily):
            fn(empty)
    with pytest.raises(EmptyFamily):
        is_subset_regular(empty, 2)


def test_invalid_s(fano):
    for s in (0, 4):
        with pytest.raises(InvalidS):
            is_subset_regular(fano, s)


def test_meet_profile_probe_checks(fano):
    with pytest.raises(WrongProbeSize):
        meet_profile(fano, (1, 2))
    with pytest.raises(WrongProbeSize):
        meet_profile(fano, (1, 1, 2))
    with pytest.raises(ElementOutOfRange):
        meet_profile(fano, (1, 2, 8))


def test_meet_profile_on_a_line(fano):
    # a line meets itself in 3 points and every other line in exactly 1
    assert meet_profile(fano, (1, 2, 3)) == (1, 0, 6, 0)


@given(families())
def test_predicates_match_brute_force(fam):
    sets = fam.sets
    assert is_intersecting(fam) == bf_intersecting(sets)
    deg = bf_degrees(fam.n, sets)
    assert degree_profile(fam).degrees == deg
    assert is_regular(fam) == ((True, deg[0]) if len(set(deg)) == 1 else (False, None))
    assert diversity(fam) == len(sets) - max(deg)
    meets = [len(set(a) & set(b)) for a, b in combinations(sets, 2)]
    assert max_pairwise_meet(fam) == (max(meets) if meets else -1)


@given(families())
def test_inner_distribution_brute_force(fam):
    k, m = fam.k, len(fam)
    hist = Counter(len(set(a) & set(b)) for a in fam.sets for b in fam.sets)
    dist = inner_distribution(fam)
    assert dist.a == tuple(Fraction(hist[k - i], m) for i in range(k + 1))
    assert dist.a[0] == 1
    assert sum(dist.a) == m


@given(families(max_n=8), st.data())
def test_meet_profile_brute_force(fam, data):
    probe = data.draw(st.sets(st.integers(1, fam.n), min_size=fam.k, max_size=fam.k))
    hist = Counter(len(probe & set(s)) for s in fam.sets)
    assert meet_profile(fam, sorted(probe)) == tuple(hist[fam.k - i] for i in range(fam.k + 1))


@given(families(max_n=8), st.integers(1, 4))
def test_subset_regular_brute_force(fam, s):
    if s > fam.k:
        return
    counts = [sum(set(t) <= set(m) for m in fam.sets) for t in combinations(range(1, fam.n + 1), s)]
    expect = (True, counts[0]) if len(set(counts)) == 1 else (False, None)
    assert is_subset_regular(fam, s) == expect


@given(families())
def test_degree_sum_identity(fam):
    assert sum(degree_profile(fam).degrees) == fam.k * len(fam)


def test_masks_match_sets(fano):
    for row, s in zip(fano.masks, fano.sets):
        bits = {x for x in range(1, 8) if int(row[0]) >> x & 1}
        assert bits == set(s)
    assert fano.masks.dtype == np.uint64

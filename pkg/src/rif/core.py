"""k-uniform set families on [n] and the predicates used to verify them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from rif import kernels
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


@dataclass(frozen=True)
class KSetFamily:
    """An immutable k-uniform family on the ground set {1, ..., n}.

    ``sets`` is kept in canonical order (lexicographic on sorted members);
    ``masks`` is the matching ``(len(sets), W)`` uint64 bit-set array.
    """

    n: int
    k: int
    sets: tuple[tuple[int, ...], ...]
    masks: np.ndarray = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, item) -> bool:
        return tuple(sorted(item)) in self._index

    @property
    def _index(self) -> frozenset:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = frozenset(self.sets)
            object.__setattr__(self, "_index_cache", idx)
        return idx

    @property
    def size(self) -> int:
        return len(self.sets)

    def ratio(self) -> Fraction:
        """k/n, the fraction of members through any point of a regular family."""
        return Fraction(self.k, self.n)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]  # degrees[x - 1] is the degree of element x

    def __getitem__(self, x: int) -> int:
        return self.degrees[x - 1]

    @property
    def max(self) -> int:
        return max(self.degrees)

    @property
    def min(self) -> int:
        return min(self.degrees)


@dataclass(frozen=True)
class InnerDistribution:
    """Exact inner distribution a_0..a_k of a nonempty family.

    a_i is the number of ordered pairs of members meeting in k - i points,
    divided by the family size.
    """

    a: tuple[Fraction, ...]
    family_size: int

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> Fraction:
        return self.a[i]

    @property
    def k(self) -> int:
        return len(self.a) - 1


def make_family(n: int, k: int, sets: Iterable[Iterable[int]]) -> KSetFamily:
    """Validate and canonicalise a family of k-subsets of [n]."""
    if not (1 <= k <= n):
        raise InvalidParameters(f"need 1 <= k <= n, got n={n}, k={k}")
    canon = []
    for raw in sets:
        members = tuple(sorted(int(x) for x in raw))
        if len(members) != k or len(set(members)) != k:
            raise WrongSetSize(f"{list(raw)} is not a {k}-set")
        if members[0] < 1 or members[-1] > n:
            raise ElementOutOfRange(f"{members} has elements outside [1, {n}]")
        canon.append(members)
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateSet(f"{a} listed twice")
    masks = kernels.encode(canon, n)
    masks.setflags(write=False)
    return KSetFamily(n, k, tuple(canon), masks)


def _require_nonempty(fam: KSetFamily) -> None:
    if len(fam) == 0:
        raise EmptyFamily("operation needs a nonempty family")


def is_intersecting(fam: KSetFamily) -> bool:
    if len(fam) < 2:
        return True
    return bool(kernels.all_pairs_intersect(fam.masks))


def degree_profile(fam: KSetFamily) -> DegreeProfile:
    deg = kernels.degree_counts(fam.masks, fam.n)
    return DegreeProfile(tuple(int(d) for d in deg[1:]))


def is_regular(fam: KSetFamily) -> tuple[bool, int | None]:
    """Return ``(True, delta)`` when every element has degree delta."""
    _require_nonempty(fam)
    prof = degree_profile(fam)
    if prof.min != prof.max:
        return False, None
    return True, prof.max


def irregularity_ratio(fam: KSetFamily) -> Fraction:
    _require_nonempty(fam)
    prof = degree_profile(fam)
    if prof.min == 0:
        raise ZeroMinDegree("some element of the ground set is uncovered")
    return Fraction(prof.max, prof.min)


def diversity(fam: KSetFamily) -> int:
    """Number of members missing a fixed element of maximal degree."""
    _require_nonempty(fam)
    return len(fam) - degree_profile(fam).max


def is_subset_regular(fam: KSetFamily, s: int) -> tuple[bool, int | None]:
    """Check that every s-subset of [n] lies in the same number of members."""
    if not (1 <= s <= fam.k):
        raise InvalidS(f"s must lie in [1, {fam.k}], got {s}")
    if s == 1:
        return is_regular(fam)
    _require_nonempty(fam)
    counts = Counter()
    for member in fam.sets:
        counts.update(combinations(member, s))
    total = comb(fam.n, s)
    values = set(counts.values())
    if len(counts) < total:
        values.add(0)
    if len(values) != 1:
        return False, None
    return True, values.pop()


def inner_distribution(fam: KSetFamily) -> InnerDistribution:
    _require_nonempty(fam)
    k = fam.k
    hist = kernels.intersection_histogram(fam.masks, k)
    size = len(fam)
    # hist[t] counts ordered pairs meeting in t points; relation i means k - i points
    a = tuple(Fraction(int(hist[k - i]), size) for i in range(k + 1))
    return InnerDistribution(a, size)


def meet_profile(fam: KSetFamily, probe: Sequence[int]) -> tuple[int, ...]:
    """Entry i counts members meeting ``probe`` in exactly k - i elements."""
    members = set(probe)
    if len(members) != fam.k or len(members) != len(probe):
        raise WrongProbeSize(f"probe must be a {fam.k}-set")
    if min(members) < 1 or max(members) > fam.n:
        raise ElementOutOfRange(f"probe {sorted(members)} leaves [1, {fam.n}]")
    row = kernels.encode([members], fam.n)[0]
    hist = kernels.meet_histogram(fam.masks, row, fam.k)
    return tuple(int(hist[fam.k - i]) for i in range(fam.k + 1))


def max_pairwise_meet(fam: KSetFamily) -> int:
    """Largest intersection between two distinct members (-1 below two members)."""
    if len(fam) < 2:
        return -1
    return int(kernels.max_offdiag_meet(fam.masks))

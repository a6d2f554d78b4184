"""Explicit regular intersecting families.

Projective planes over GF(q), the three combinators (supersets, disjoint
sum, product), the unbounded-ratio family built from a plane plus a complete
uniform family, and the n = 2k constructions obtained by balancing a
(k-1)-uniform family on [2k-1] and folding it into k-sets of [2k].
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, ceil
from typing import Iterable, Sequence

from rif.core import (
    KSetFamily,
    is_intersecting,
    is_regular,
    make_family,
    max_pairwise_meet,
)
from rif.errors import (
    GroundSetExhausted,
    InvalidParameters,
    KNotPowerOfTwo,
    LTooLarge,
    NoReplacementFound,
    NotIntersecting,
    NotRegular,
    PowerOfTwoK,
    ProfileInfeasible,
    RatioMismatch,
    RemovalNotPresent,
    SizeCapExceeded,
)
from rif.fields import gf

DEFAULT_SIZE_CAP = 10**6


def size_cap() -> int:
    """Largest family the constructions will materialise (``RIF_SIZE_CAP`` overrides)."""
    raw = os.environ.get("RIF_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


def _guard(size: int, what: str, cap: int | None = None) -> None:
    cap = size_cap() if cap is None else cap
    if size > cap:
        raise SizeCapExceeded(f"{what} would have {size} sets, cap is {cap}")


def _require_regular_intersecting(fam: KSetFamily, name: str, intersecting: bool = True) -> int:
    ok, delta = is_regular(fam)
    if not ok:
        raise NotRegular(f"{name} is not regular")
    if intersecting and not is_intersecting(fam):
        raise NotIntersecting(f"{name} is not intersecting")
    return delta


def is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


# --------------------------------------------------------------------------
# projective planes and combinators


def _homogeneous_points(q: int) -> Iterable[tuple[int, int, int]]:
    """Homogeneous coordinates whose first nonzero entry is 1."""
    for b in range(q):
        for c in range(q):
            yield (1, b, c)
    for c in range(q):
        yield (0, 1, c)
    yield (0, 0, 1)


def projective_plane(q: int) -> KSetFamily:
    """Lines of PG(2, q) as (q+1)-subsets of the q^2+q+1 points."""
    field = gf(q)
    points = sorted(_homogeneous_points(q))
    label = {p: i + 1 for i, p in enumerate(points)}
    lines = []
    for ln in points:
        members = []
        for pt in points:
            acc = 0
            for a, b in zip(ln, pt):
                acc = field.add(acc, field.mul(a, b))
            if acc == 0:
                members.append(label[pt])
        lines.append(members)
    return make_family(len(points), q + 1, lines)


def complete_uniform(z: int, m: int) -> KSetFamily:
    if not (1 <= m <= z):
        raise InvalidParameters(f"need 1 <= m <= z, got z={z}, m={m}")
    _guard(comb(z, m), f"complete_uniform({z},{m})")
    return make_family(z, m, combinations(range(1, z + 1), m))


def extend_family(fam: KSetFamily, l: int) -> KSetFamily:
    """All (k+l)-subsets of [n] containing some member."""
    if l < 1:
        raise InvalidParameters(f"l must be >= 1, got {l}")
    _require_regular_intersecting(fam, "family")
    n, k = fam.n, fam.k
    if k + l > n:
        raise GroundSetExhausted(f"k + l = {k + l} exceeds n = {n}")
    meet = max_pairwise_meet(fam)
    if meet >= 0 and l >= k - meet:
        raise LTooLarge(f"l = {l} must be below the minimum difference {k - meet}")
    _guard(comb(n - k, l) * len(fam), "extension")
    out = []
    for member in fam.sets:
        rest = [x for x in range(1, n + 1) if x not in member]
        for extra in combinations(rest, l):
            out.append(member + extra)
    return make_family(n, k + l, out)


def disjoint_sum(famF: KSetFamily, famG: KSetFamily) -> KSetFamily:
    """{F ∪ G'} with G relabelled onto n_F+1 .. n_F+n_G; ratios must agree."""
    _require_regular_intersecting(famF, "first family")
    _require_regular_intersecting(famG, "second family", intersecting=False)
    if famF.ratio() != famG.ratio():
        raise RatioMismatch(f"ratios differ: {famF.ratio()} vs {famG.ratio()}")
    _guard(len(famF) * len(famG), "disjoint sum")
    shift = famF.n
    shifted = [tuple(x + shift for x in g) for g in famG.sets]
    return make_family(famF.n + famG.n, famF.k + famG.k, (f + g for f in famF.sets for g in shifted))


def product_family(f1: KSetFamily, f2: KSetFamily) -> KSetFamily:
    """{F1 × F2}, with the pair (x, y) numbered (x-1)*n2 + y."""
    _require_regular_intersecting(f1, "first family")
    _require_regular_intersecting(f2, "second family")
    _guard(len(f1) * len(f2), "product")
    n2 = f2.n
    out = [[(x - 1) * n2 + y for x in a for y in b] for a in f1.sets for b in f2.sets]
    return make_family(f1.n * n2, f1.k * f2.k, out)


def prop3_construction(q: int, l: int, cap: int | None = None) -> KSetFamily:
    """Plane of order q plus all l(q+1)-subsets of l(q^2+q+1) fresh points."""
    if l < 1:
        raise InvalidParameters(f"l must be >= 1, got {l}")
    pts = q * q + q + 1
    _guard(pts * comb(l * pts, l * (q + 1)), f"prop3({q},{l})", cap)
    return disjoint_sum(projective_plane(q), complete_uniform(l * pts, l * (q + 1)))


# --------------------------------------------------------------------------
# n = 2k: balancing a (k-1)-uniform family on [2k-1]


@dataclass(frozen=True)
class HalfFamilySpec:
    """Target for ``balanced_half_family``.

    ``target_profile[x - 1]`` is the required degree of x in [2k-1]; every
    exception must contain 2k-1 and is excluded from the result.
    """

    k: int
    exceptions: tuple[tuple[int, ...], ...]
    target_profile: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.target_profile) // (self.k - 1)


def _validate_spec(spec: HalfFamilySpec) -> None:
    k = spec.k
    top = 2 * k - 1
    if k < 2:
        raise InvalidParameters(f"need k >= 2, got {k}")
    if len(spec.target_profile) != top:
        raise ProfileInfeasible(f"profile must have {top} entries")
    if sum(spec.target_profile) % (k - 1):
        raise ProfileInfeasible("profile sum is not a multiple of k - 1")
    if any(d < 0 or d > comb(top - 1, k - 2) for d in spec.target_profile):
        raise ProfileInfeasible("profile entry outside [0, C(2k-2, k-2)]")
    for a in spec.exceptions:
        if len(a) != k - 1 or len(set(a)) != k - 1 or top not in a or min(a) < 1 or max(a) > top:
            raise ProfileInfeasible(f"exception {a} is not a (k-1)-set of [2k-1] containing 2k-1")


def _colex(sets: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(sets, key=lambda s: tuple(reversed(s)))


class _HalfFamily:
    """Mutable working family with degree bookkeeping and in-place replacement."""

    def __init__(self, top: int):
        self.top = top
        self.members: list[tuple[int, ...]] = []
        self.present: set[tuple[int, ...]] = set()
        self.deg = [0] * (top + 1)

    def add(self, s: tuple[int, ...]) -> None:
        self.members.append(s)
        self.present.add(s)
        for x in s:
            self.deg[x] += 1

    def replace(self, g: int, h: int, forbidden: set) -> bool:
        """Perform one (g, h)-replacement, scanning members in stored order."""
        for pos, a in enumerate(self.members):
            if g not in a or h in a:
                continue
            b = tuple(sorted((set(a) - {g}) | {h}))
            if b in self.present or b in forbidden:
                continue
            self.present.discard(a)
            self.present.add(b)
            self.members[pos] = b
            self.deg[g] -= 1
            self.deg[h] += 1
            return True
        return False


def _balance_layer(layer: _HalfFamily, elems: Sequence[int], trace: list | None) -> None:
    while True:
        degs = [layer.deg[x] for x in elems]
        hi, lo = max(degs), min(degs)
        if hi - lo <= 1:
            return
        g = elems[degs.index(hi)]
        h = elems[degs.index(lo)]
        if not layer.replace(g, h, set()):
            raise NoReplacementFound(f"no ({g},{h})-replacement available while balancing")
        if trace is not None:
            trace.append(sum(layer.deg[x] ** 2 for x in elems))


def balanced_half_family(spec: HalfFamilySpec, trace: list | None = None) -> KSetFamily:
    """Family of (k-1)-subsets of [2k-1] with exactly the target degrees.

    Built from every (k-1)-set through 2k-1 except the exceptions, a greedy
    colex fill from [2k-2], (g,h)-replacements balancing [2k-2], a relabelling
    of [2k-2] making those degrees nondecreasing, and finally replacements
    moving degree off elements above target (2k-1 first) onto elements below.
    ``trace``, if given, receives the sum of squared degrees on [2k-2] after
    each balancing replacement.
    """
    _validate_spec(spec)
    k = spec.k
    top = 2 * k - 1
    size = spec.size
    exceptions = {tuple(sorted(a)) for a in spec.exceptions}

    through_top = [c + (top,) for c in combinations(range(1, top), k - 2)]
    through_top = [s for s in through_top if s not in exceptions]
    if len(through_top) > size:
        raise ProfileInfeasible(f"target size {size} is below the {len(through_top)} sets through {top}")
    need = size - len(through_top)
    pool = _colex(combinations(range(1, top), k - 1))
    if need > len(pool):
        raise ProfileInfeasible(f"cannot pick {need} sets from [{top - 1}]")

    # greedy fill of the [2k-2] layer under the ceiling of the average degree
    layer = _HalfFamily(top)
    cap = ceil(Fraction(need * (k - 1), top - 1)) if need else 0
    for s in pool:
        if len(layer.members) == need:
            break
        if all(layer.deg[x] < cap for x in s):
            layer.add(s)
    for s in pool:
        if len(layer.members) == need:
            break
        if s not in layer.present:
            layer.add(s)

    elems = list(range(1, top))
    _balance_layer(layer, elems, trace)

    # relabel [2k-2] so that layer degrees are nondecreasing
    order = sorted(elems, key=lambda x: (layer.deg[x], x))
    perm = {old: new for new, old in enumerate(order, start=1)}
    fam = _HalfFamily(top)
    for s in through_top:
        fam.add(s)
    for s in layer.members:
        fam.add(tuple(sorted(perm[x] for x in s)))

    target = (0,) + tuple(spec.target_profile)
    while True:
        surplus = [x for x in range(1, top + 1) if fam.deg[x] > target[x]]
        deficit = [x for x in range(1, top + 1) if fam.deg[x] < target[x]]
        if not surplus and not deficit:
            break
        if not surplus or not deficit:
            raise ProfileInfeasible("degree sum does not match the target profile")
        g = top if top in surplus else max(surplus, key=lambda x: (fam.deg[x] - target[x], -x))
        deficit.sort(key=lambda x: (target[x] - fam.deg[x], -x), reverse=True)
        if not any(fam.replace(g, h, exceptions) for h in deficit):
            raise NoReplacementFound(f"no ({g},h)-replacement reaches the target profile")

    out = make_family(top, k - 1, fam.members)
    assert len(out) == size and not (exceptions & set(out.sets))
    return out


def fold_to_intersecting(half: KSetFamily, k: int, removals: Iterable[Sequence[int]] = ()) -> KSetFamily:
    """{Q + {2k}} together with every k-subset of [2k-1] whose complement in
    [2k] is not one of those sets, minus ``removals``."""
    top = 2 * k - 1
    if half.k != k - 1 or half.n != top:
        raise InvalidParameters(f"half family must be ({k - 1})-uniform on [{top}]")
    _guard(comb(top, k), f"fold for k={k}")
    upper = [q + (2 * k,) for q in half.sets]
    blocked = {tuple(x for x in range(1, top + 1) if x not in q) for q in half.sets}
    lower = [s for s in combinations(range(1, top + 1), k) if s not in blocked]
    members = set(upper) | set(lower)
    for r in removals:
        key = tuple(sorted(r))
        if key not in members:
            raise RemovalNotPresent(f"{key} is not in the folded family")
        members.discard(key)
    return make_family(2 * k, k, members)


def neq2k_exceptions(k: int) -> tuple[tuple[int, ...], ...]:
    top = 2 * k - 1
    h = k // 2
    a1 = tuple(range(k + 1, top + 1))
    a2 = tuple(range(1, h + 1)) + tuple(range(3 * h + 1, top + 1))
    a3 = tuple(range(h + 1, k + 1)) + tuple(range(3 * h + 1, top + 1))
    return a1, a2, a3


def neq2k_half_spec(k: int) -> HalfFamilySpec:
    """Half-family target when k is a power of two: first 3k/2 elements one higher."""
    top = 2 * k - 1
    d, rem = divmod(comb(top - 1, k - 2) - 3, 2)
    if rem:
        raise ProfileInfeasible(f"C({top - 1},{k - 2}) - 3 is odd")
    profile = tuple(d + 1 if x <= 3 * k // 2 else d for x in range(1, top + 1))
    return HalfFamilySpec(k, neq2k_exceptions(k), profile)


def brace_daykin_half_spec(k: int) -> HalfFamilySpec:
    top = 2 * k - 1
    d, rem = divmod(comb(top - 1, k - 2), 2)
    if rem:
        raise ProfileInfeasible(f"C({top - 1},{k - 2}) is odd")
    return HalfFamilySpec(k, (), (d,) * top)


def brace_daykin(k: int) -> KSetFamily:
    """Regular intersecting family on [2k] of size C(2k-1, k), k not a power of two."""
    if k < 3:
        raise InvalidParameters(f"need k >= 3, got {k}")
    if is_power_of_two(k):
        raise PowerOfTwoK(f"k = {k} is a power of two")
    _guard(comb(2 * k - 1, k), f"brace_daykin({k})")
    return fold_to_intersecting(balanced_half_family(brace_daykin_half_spec(k)), k)


def neq2k_construction(k: int) -> KSetFamily:
    """Regular intersecting family on [2k] of size C(2k-1, k) - 3, k a power of two >= 4."""
    if k < 4 or not is_power_of_two(k):
        raise KNotPowerOfTwo(f"k must be a power of two >= 4, got {k}")
    _guard(comb(2 * k - 1, k), f"neq2k({k})")
    top = 2 * k - 1
    half = balanced_half_family(neq2k_half_spec(k))
    removals = [tuple(x for x in range(1, top + 1) if x not in a) for a in neq2k_exceptions(k)]
    return fold_to_intersecting(half, k, removals)

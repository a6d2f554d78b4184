"""Searching for large regular intersecting families.

Two strategies:

* cyclic orbits -- unions of orbits of k-sets under x -> x+1 (mod n) are
  regular automatically, so the best intersecting union is a maximum-weight
  clique in the orbit compatibility graph;
* depth-first search -- candidates in lexicographic order, pruned by
  per-element degree caps and degree capacity, backed by the numba kernel
  ``kernels.dfs_run``.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

import numpy as np

from rif import kernels
from rif._accel import HAVE_JIT
from rif.bounds import ekr_bound, general_bound, largest_feasible_size
from rif.clique import max_weight_clique
from rif.core import (
    KSetFamily,
    degree_profile,
    inner_distribution,
    is_intersecting,
    is_regular,
    make_family,
)
from rif.errors import InvalidParameters, LimitExceeded, TimeLimitExceeded
from rif.scheme import macwilliams_transform, scheme_tables

log = logging.getLogger(__name__)

CYCLIC = "CyclicOrbit"
DFS = "DFS"
DEFAULT_N_LIMIT = 30
DEFAULT_CANDIDATE_LIMIT = 5_000
DEFAULT_ORBIT_CANDIDATES = 5_000_000


@dataclass(frozen=True)
class SearchResult:
    family: KSetFamily | None
    size: int
    strategy: str
    exhaustive: bool
    seed: int
    elapsed: float
    explored_nodes: int
    scope: str = ""
    timed_out: bool = False
    # the strategy's own search space (``scope``) was covered completely
    scope_complete: bool = False

    @property
    def delta(self) -> int | None:
        if self.family is None:
            return None
        return self.family.k * self.size // self.family.n


def _check(n: int, k: int, limit: int) -> None:
    if k < 1 or n < 2 * k:
        raise InvalidParameters(f"need k >= 1 and n >= 2k, got n={n}, k={k}")
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the configured limit {limit}")


# --------------------------------------------------------------------------
# cyclic orbits


def _rotate(mask: int, n: int) -> int:
    """Shift x -> x+1 (mod n) on a bit-set over elements 1..n (bit x)."""
    top = mask >> n & 1
    mask = (mask << 1) & (((1 << n) - 1) << 1)
    return mask | (top << 1)


def cyclic_orbits(n: int, k: int) -> list[list[int]]:
    """Orbits of k-subsets of [n] under the cyclic shift, as lists of bit masks.

    Orbits are listed by their lexicographically smallest member.
    """
    seen: set[int] = set()
    orbits = []
    for combo in combinations(range(1, n + 1), k):
        mask = 0
        for x in combo:
            mask |= 1 << x
        if mask in seen:
            continue
        orbit = []
        cur = mask
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = _rotate(cur, n)
        orbits.append(orbit)
    return orbits


def cyclic_orbit_search(n: int, k: int, *, limit: int = DEFAULT_N_LIMIT, seed: int = 0) -> SearchResult:
    _check(n, k, limit)
    if comb(n, k) > DEFAULT_ORBIT_CANDIDATES:
        raise LimitExceeded(f"C({n},{k}) = {comb(n, k)} k-sets is beyond the orbit enumeration limit")
    t0 = time.monotonic()
    orbits = cyclic_orbits(n, k)

    members = np.array([m for orb in orbits for m in orb], dtype=np.uint64)
    owner = np.repeat(np.arange(len(orbits)), [len(o) for o in orbits])

    def disjoint_orbits(rep: int) -> np.ndarray:
        return np.unique(owner[(members & np.uint64(rep)) == 0])

    good = []
    for idx, orb in enumerate(orbits):
        if idx in set(disjoint_orbits(orb[0]).tolist()):
            continue
        deg = kernels.degree_counts(_masks_from_ints(orb), n)[1:]
        # a full orbit of the cyclic group is always regular
        assert (deg == deg[0]).all(), "orbit union is not regular"
        good.append(idx)

    pos = {orb_idx: v for v, orb_idx in enumerate(good)}
    adj = []
    for orb_idx in good:
        bad = set(disjoint_orbits(orbits[orb_idx][0]).tolist())
        row = 0
        for other in good:
            if other != orb_idx and other not in bad:
                row |= 1 << pos[other]
        adj.append(row)
    weights = [len(orbits[i]) for i in good]
    clique = max_weight_clique(weights, adj)

    family = None
    if clique.vertices:
        sets = []
        for v in clique.vertices:
            for mask in orbits[good[v]]:
                sets.append([x for x in range(1, n + 1) if mask >> x & 1])
        family = make_family(n, k, sets)
        assert is_regular(family)[0] and is_intersecting(family)
        assert len(family) <= general_bound(n, k)
    return SearchResult(
        family,
        clique.weight,
        CYCLIC,
        False,  # optimal among orbit unions only, not among all families
        seed,
        time.monotonic() - t0,
        clique.nodes,
        scope=f"unions of Z_{n}-orbits",
        scope_complete=True,
    )


def _masks_from_ints(values) -> np.ndarray:
    return np.array(values, dtype=np.uint64).reshape(-1, 1)


# --------------------------------------------------------------------------
# depth-first search


class _Instance:
    """Candidate k-sets of [n] in lexicographic order plus packed lookup tables."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.sets = list(combinations(range(1, n + 1), k))
        N = len(self.sets)
        self.masks = kernels.encode(self.sets, n)
        meets = np.bitwise_count(self.masks[:, None, :] & self.masks[None, :, :]).sum(axis=2) > 0
        np.fill_diagonal(meets, False)
        self.compat = _pack_rows(meets)
        incid = np.zeros((n + 1, N), dtype=bool)
        for i, s in enumerate(self.sets):
            incid[list(s), i] = True
        self.elem = _pack_rows(incid)
        self.cand_elems = np.array(self.sets, dtype=np.int64).reshape(N, k)
        self.words = self.compat.shape[1]


def _pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a boolean matrix row-wise into little-endian uint64 words."""
    rows, cols = bits.shape
    words = (cols + 63) // 64
    padded = np.zeros((rows, words * 64), dtype=bool)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(rows, words)


class _Branch:
    def __init__(self, inst: _Instance, first: int, target: int, delta: int):
        self.first = first
        self.stack = np.zeros((target + 1, inst.words), dtype=np.uint64)
        self.chosen = np.zeros(target, dtype=np.int64)
        self.deg = np.zeros(inst.n + 1, dtype=np.int64)
        self.state = np.array([1, 0], dtype=np.int64)
        self.status = 2
        # fix the first member; later members come after it in index order
        self.chosen[0] = first
        open_ = inst.compat[first].copy()
        open_[: first >> 6] = 0
        open_[first >> 6] &= ~np.uint64((1 << ((first & 63) + 1)) - 1)
        for x in inst.sets[first]:
            self.deg[x] = 1
            if delta == 1:
                open_ &= ~inst.elem[x]
        self.stack[1] = open_


def _run_target(inst, target, delta, deadline, threads, chunk):
    """Search for a family of exactly ``target`` sets.

    Returns ``(chosen indices or None, exhausted, nodes)``.
    """
    # the lexicographically first member of any solution contains element 1
    firsts = [i for i, s in enumerate(inst.sets) if s[0] == 1]
    branches = [_Branch(inst, i, target, delta) for i in firsts]
    lock = threading.Lock()
    found = [len(branches)]  # smallest branch position with a solution
    expired = threading.Event()

    def work(pos: int) -> None:
        br = branches[pos]
        while br.status == 2:
            with lock:
                if found[0] < pos:
                    return
            if deadline is not None and time.monotonic() > deadline:
                expired.set()
                return
            br.status = kernels.dfs_run(
                inst.compat, inst.elem, inst.cand_elems, delta, target, br.stack, br.chosen, br.deg, br.state, chunk, 1
            )
        if br.status == 1:
            with lock:
                found[0] = min(found[0], pos)

    if threads <= 1:
        for pos in range(len(branches)):
            work(pos)
            if found[0] < len(branches) or expired.is_set():
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(len(branches))))

    nodes = int(sum(br.state[1] for br in branches))
    if found[0] < len(branches):
        # smaller branches must have finished for the answer to be canonical
        if all(branches[p].status == 0 for p in range(found[0])):
            return [int(i) for i in branches[found[0]].chosen], True, nodes
        return [int(i) for i in branches[found[0]].chosen], False, nodes
    exhausted = all(br.status == 0 for br in branches)
    return None, exhausted, nodes


def dfs_targets(n: int, k: int, start: str = "general") -> list[int]:
    """Target sizes tried by auto mode, largest first (multiples of n / gcd(n, k))."""
    if start == "general":
        top = general_bound(n, k)
    elif start == "ekr":
        top = largest_feasible_size(n, k, ekr_bound(n, k))
    else:
        raise InvalidParameters(f"unknown start bound {start!r}")
    step = n // gcd(n, k)
    return list(range(top, 0, -step))


def dfs_search(
    n: int,
    k: int,
    target: int | None = None,
    *,
    time_limit: float | None = None,
    seed: int = 0,
    threads: int = 1,
    start: str = "general",
    limit: int = DEFAULT_N_LIMIT,
    chunk: int | None = None,
) -> SearchResult:
    """Depth-first search for a regular intersecting family.

    With ``target=None`` sizes are tried downwards from the bound named by
    ``start`` ("general" or "ekr"), so the first hit is the largest possible
    and ``exhaustive`` then certifies optimality. With a fixed target,
    ``exhaustive`` is True only when the search space was fully explored
    without success. Running out of time raises TimeLimitExceeded carrying
    the best-so-far result.
    """
    _check(n, k, limit)
    if comb(n, k) > DEFAULT_CANDIDATE_LIMIT:
        raise LimitExceeded(f"C({n},{k}) candidates exceed the limit {DEFAULT_CANDIDATE_LIMIT}")
    if target is not None and (target < 1 or (k * target) % n):
        raise InvalidParameters(f"target {target} needs n | k*target with target >= 1")
    if chunk is None:
        chunk = 200_000 if HAVE_JIT else 5_000
    t0 = time.monotonic()
    deadline = None if time_limit is None else t0 + time_limit
    targets = [target] if target is not None else dfs_targets(n, k, start)
    inst = _Instance(n, k) if targets else None

    total_nodes = 0
    for m in targets:
        delta = k * m // n
        if m > len(inst.sets):
            continue
        chosen, exhausted, nodes = _run_target(inst, m, delta, deadline, threads, chunk)
        total_nodes += nodes
        log.debug("n=%d k=%d target=%d nodes=%d found=%s", n, k, m, nodes, chosen is not None)
        if chosen is not None:
            fam = make_family(n, k, [inst.sets[i] for i in chosen])
            return SearchResult(
                fam,
                m,
                DFS,
                exhausted and target is None,
                seed,
                time.monotonic() - t0,
                total_nodes,
                scope="all families" if target is None else f"size {m}",
                scope_complete=exhausted,
            )
        if not exhausted:
            partial = SearchResult(None, 0, DFS, False, seed, time.monotonic() - t0, total_nodes, f"size {m}", True)
            raise TimeLimitExceeded(f"time limit {time_limit}s reached while trying size {m}", partial)
    return SearchResult(
        None,
        0,
        DFS,
        True,
        seed,
        time.monotonic() - t0,
        total_nodes,
        scope="all families" if target is None else f"size {target}",
        scope_complete=True,
    )


# --------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CertificateReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def verify_certificate(result: SearchResult) -> CertificateReport:
    """Re-check a search result from scratch with the core predicates."""
    fam = result.family
    if fam is None:
        return CertificateReport((("family present", False, "no family"),))
    checks = []
    reg, delta = is_regular(fam)
    checks.append(("regular", reg, f"delta={delta}"))
    checks.append(("intersecting", is_intersecting(fam), ""))
    prof = degree_profile(fam)
    checks.append(("degree sum", sum(prof.degrees) == fam.k * len(fam), f"sum={sum(prof.degrees)}"))
    checks.append(("size matches", len(fam) == result.size, f"{len(fam)} vs {result.size}"))
    dist = inner_distribution(fam)
    checks.append(("inner distribution sum", sum(dist.a) == len(fam), f"a={_fmt(dist.a)}"))
    if fam.n >= 2 * fam.k:
        mw = macwilliams_transform(scheme_tables(fam.n, fam.k), dist)
        checks.append(("macwilliams nonnegative", all(x >= 0 for x in mw), f"aQ={_fmt(mw)}"))
        if reg:
            checks.append(("macwilliams entry 1 zero", mw[1] == 0, str(mw[1])))
        checks.append(("within general bound", len(fam) <= general_bound(fam.n, fam.k), ""))
    return CertificateReport(tuple(checks))


def _fmt(values) -> str:
    return "(" + ", ".join(str(Fraction(v)) for v in values) + ")"

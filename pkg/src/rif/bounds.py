"""Closed-form bounds and existence obstructions for regular intersecting families."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor, gcd, isqrt

from rif.errors import InvalidParameters, InvalidS
from rif.scheme import binom, eigenvalue_P, lp_max_regular_intersecting

UPPER = "upper"
LOWER = "lower"
OBSTRUCTION = "obstruction"


def _check(n: int, k: int) -> None:
    if k < 1 or n < 2 * k:
        raise InvalidParameters(f"need k >= 1 and n >= 2k, got n={n}, k={k}")


def ekr_bound(n: int, k: int) -> int:
    _check(n, k)
    return comb(n - 1, k - 1)


def prop1_bound(n: int, k: int) -> int:
    """Size cap for regular intersecting families obtained from the diversity stability bound."""
    _check(n, k)
    return 3 * binom(n - 3, k - 2) + binom(n - 3, k - 3)


def _check_s(n: int, k: int, s: int) -> None:
    if s < 1 or s % 2 == 0:
        raise InvalidS(f"s must be a positive odd integer, got {s}")
    _check(n, k)
    if k < s + 2:
        raise InvalidParameters(f"need k >= s + 2, got k={k}, s={s}")


def hoffman_bound(n: int, k: int, s: int = 1) -> Fraction:
    """Hoffman-type ratio bound for s-subset-regular intersecting families (binomial form)."""
    _check_s(n, k, s)
    return Fraction(comb(n, k)) / (1 + Fraction(comb(n - k, k), comb(n - k - s - 2, k - s - 2)))


def hoffman_bound_eigen(n: int, k: int, s: int = 1) -> Fraction:
    """The same bound written as v / (1 - P_{0k} / P_{(s+2)k})."""
    _check_s(n, k, s)
    return Fraction(comb(n, k)) / (1 - Fraction(eigenvalue_P(n, k, 0, k), eigenvalue_P(n, k, s + 2, k)))


def hoffman_floor(n: int, k: int, s: int = 1) -> int:
    return floor(hoffman_bound(n, k, s))


def tightness_integrality_check(n: int, k: int, s: int = 1) -> tuple[Fraction | None, bool]:
    """Meet count a non-member k-set would have if the s = 1 bound were attained.

    Returns ``(t, obstruction)``; obstruction means t is not a positive integer,
    so the bound cannot be attained. ``t`` is None when its denominator vanishes.
    """
    if s != 1:
        raise InvalidS("the meet-count closed form is only available for s = 1")
    _check(n, k)
    den = n * n - 3 * k * n - n + 3 * k * k
    if den == 0:
        return None, True
    t = Fraction(3 * k * (k - 1) * (k - 2), den)
    return t, not (t.denominator == 1 and t > 0)


def lower_bound_regular(n: int, k: int) -> int:
    """Smallest size a regular intersecting family could have, when one exists."""
    if not (2 * k <= n < k * k):
        raise InvalidParameters(f"need 2k <= n < k^2, got n={n}, k={k}")
    return ceil(1 + Fraction(k * (n - k), k * k - n))


def existence_threshold(k: int) -> int:
    if k < 2:
        raise InvalidParameters(f"need k >= 2, got {k}")
    return k * k - k + 1


def nonexistent(n: int, k: int) -> bool:
    return n > existence_threshold(k)


def is_sum_of_two_squares(m: int) -> bool:
    a = 0
    while a * a <= m:
        b = isqrt(m - a * a)
        if b * b == m - a * a:
            return True
        a += 1
    return False


def brc_obstruction(order: int) -> bool:
    """True when Bruck-Ryser-Chowla rules out a projective plane of this order."""
    if order < 2:
        raise InvalidParameters(f"order must be >= 2, got {order}")
    return order % 4 in (1, 2) and not is_sum_of_two_squares(order)


def general_bound(n: int, k: int) -> int:
    """Best integer cap: 0 past k^2-k+1, the plane size at it, else the
    largest m <= floor(Hoffman) with n | k*m."""
    _check(n, k)
    if k < 2 or n > k * k - k + 1:
        return 0
    if n == k * k - k + 1:
        return n
    return largest_feasible_size(n, k, hoffman_floor(n, k, 1))


def largest_feasible_size(n: int, k: int, cap: int) -> int:
    """Largest m <= cap with k*m divisible by n (the degree k*m/n must be whole)."""
    step = n // gcd(n, k)
    return (cap // step) * step


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    kind: str
    note: str = ""
    exact: Fraction | None = None


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    entries: tuple[BoundEntry, ...]
    verdict: str = "Open"  # "Nonexistent" when some obstruction applies
    notes: tuple[str, ...] = field(default_factory=tuple)

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def consistent(self) -> bool:
        """Every applicable upper bound dominates every applicable lower bound."""
        if self.verdict == "Nonexistent":
            return True
        ups = [e.value for e in self.entries if e.applicable and e.kind == UPPER and e.value is not None]
        lows = [e.value for e in self.entries if e.applicable and e.kind == LOWER and e.value is not None]
        return not ups or not lows or min(ups) >= max(lows)


def bound_report(n: int, k: int, s: int = 1, with_lp: bool = True) -> BoundReport:
    _check(n, k)
    entries: list[BoundEntry] = []
    nonexist_reasons = []

    entries.append(BoundEntry("ekr", ekr_bound(n, k), True, UPPER, "largest intersecting family"))
    entries.append(BoundEntry("prop1", prop1_bound(n, k), True, UPPER, "diversity stability cap"))

    for odd in sorted({1, s}):
        name = f"hoffman(s={odd})"
        try:
            h = hoffman_bound(n, k, odd)
        except (InvalidParameters, InvalidS) as exc:
            entries.append(BoundEntry(name, None, False, UPPER, str(exc)))
            continue
        note = f"exact {h}"
        if odd > 1:
            note += "; only for s-subset-regular families"
        entries.append(BoundEntry(name, floor(h), odd == 1, UPPER, note, exact=h))

    if k >= 2:
        thr = existence_threshold(k)
        if n > thr:
            nonexist_reasons.append(f"n > k^2-k+1 = {thr}")
        entries.append(
            BoundEntry("threshold", thr, True, OBSTRUCTION, "regular intersecting families need n <= k^2-k+1")
        )
        gen = general_bound(n, k)
        entries.append(BoundEntry("general", gen, True, UPPER, "Hoffman floor with integral degree, or plane size"))
    if k >= 3 and n >= 2 * k:
        t, obstr = tightness_integrality_check(n, k, 1)
        msg = f"meet count {t}; " + ("Hoffman bound not attainable" if obstr else "no integrality obstruction")
        entries.append(BoundEntry("tightness(s=1)", None, True, OBSTRUCTION, msg, exact=t))

    if 2 * k <= n < k * k:
        low = lower_bound_regular(n, k)
        entries.append(BoundEntry("lower", low, True, LOWER, "minimum size of any regular intersecting family"))
        gen = general_bound(n, k)
        if low > gen:
            nonexist_reasons.append(f"lower bound {low} exceeds general bound {gen}")
    else:
        entries.append(BoundEntry("lower", None, False, LOWER, "needs 2k <= n < k^2"))

    if k >= 3 and n == k * k - k + 1:
        order = k - 1
        brc = brc_obstruction(order)
        if brc:
            nonexist_reasons.append(f"no projective plane of order {order}")
        note = "Bruck-Ryser-Chowla rules out the plane" if brc else "no Bruck-Ryser-Chowla obstruction"
        if order == 10:
            note += "; order 10 is excluded by exhaustive computer search"
        entries.append(BoundEntry("brc", order, True, OBSTRUCTION, note))

    if with_lp and k <= 40:
        lp = lp_max_regular_intersecting(n, k, True)
        if lp.optimum is None:
            nonexist_reasons.append("Delsarte LP with regularity is infeasible")
            entries.append(BoundEntry("delsarte-lp", None, True, UPPER, "infeasible"))
        else:
            entries.append(
                BoundEntry("delsarte-lp", floor(lp.optimum), True, UPPER, f"exact {lp.optimum}", exact=lp.optimum)
            )

    for name in ("junta(thm-regular)", "junta(alpha-irregular)"):
        entries.append(BoundEntry(name, None, False, UPPER, "not computable (non-constructive constant)"))

    verdict = "Nonexistent" if nonexist_reasons else "Open"
    return BoundReport(n, k, tuple(entries), verdict, tuple(nonexist_reasons))

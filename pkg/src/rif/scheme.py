"""Exact algebra of the Johnson scheme J(n, k).

Relation i holds between two k-sets meeting in k - i points. Everything here
is integer or ``Fraction`` arithmetic; nothing of size C(n, k) is ever built,
families enter only through their inner distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from rif import simplex
from rif.core import InnerDistribution
from rif.errors import DimensionMismatch, InvalidIndices, InvalidParameters

OPTIMAL = "Optimal"
INFEASIBLE = "Infeasible"


def binom(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_nk(n: int, k: int) -> None:
    if k < 1 or n < 2 * k:
        raise InvalidParameters(f"need k >= 1 and n >= 2k, got n={n}, k={k}")


def eigenvalue_P(n: int, k: int, j: int, i: int) -> int:
    """Eigenvalue of the relation-i adjacency matrix on eigenspace V_j."""
    _check_indices(n, k, i, j)
    return sum(
        (-1) ** h * binom(j, h) * binom(k - j, i - h) * binom(n - k - j, i - h) for h in range(i + 1)
    )


def eigenvalue_P_alt(n: int, k: int, j: int, i: int) -> int:
    """Same eigenvalue from the second (alternating over h >= i) expansion."""
    _check_indices(n, k, i, j)
    return sum(
        (-1) ** (h - i + j) * binom(h, i) * binom(n - 2 * h, k - h) * binom(n - h - j, h - j)
        for h in range(i, k + 1)
    )


def _check_indices(n: int, k: int, i: int, j: int) -> None:
    if k < 0 or n < 2 * k or not (0 <= i <= k) or not (0 <= j <= k):
        raise InvalidIndices(f"need 0 <= i, j <= k <= n - k; got n={n}, k={k}, i={i}, j={j}")


@dataclass(frozen=True)
class SchemeTables:
    """P, Q, valencies r and multiplicities f of J(n, k).

    ``P[j][i]`` is the eigenvalue of A_i on V_j; ``Q = v * P^{-1}``.
    """

    n: int
    k: int
    P: tuple[tuple[int, ...], ...]
    Q: tuple[tuple[Fraction, ...], ...]
    r: tuple[int, ...]
    f: tuple[int, ...]
    v: int


def _invert(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    size = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            raise InvalidParameters("eigenvalue matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=256)
def scheme_tables(n: int, k: int) -> SchemeTables:
    _check_nk(n, k)
    P = tuple(tuple(eigenvalue_P(n, k, j, i) for i in range(k + 1)) for j in range(k + 1))
    v = comb(n, k)
    inv = _invert(P)
    Q = tuple(tuple(v * x for x in row) for row in inv)
    f = []
    for x in Q[0]:
        if x.denominator != 1:
            raise InvalidParameters(f"non-integral multiplicity {x} for J({n},{k})")
        f.append(int(x))
    r = P[0]
    return SchemeTables(n, k, P, Q, tuple(r), tuple(f), v)


def multiplicity_from_P(n: int, k: int, j: int) -> Fraction:
    """f_j = v / sum_i P_ji^2 / r_i, from row orthogonality of P alone."""
    _check_nk(n, k)
    v = comb(n, k)
    total = sum(
        (Fraction(eigenvalue_P(n, k, j, i) ** 2, eigenvalue_P(n, k, 0, i)) for i in range(k + 1)),
        Fraction(0),
    )
    return v / total


def dual_eigenvalue_numerator(n: int, k: int, i: int, j: int) -> int:
    """The polynomial c_j * Q_ij for j in {1, 2} (c_j as in ``dual_eigenvalue_closed``)."""
    _check_dual(n, k, i, j)
    if j == 1:
        return k * n - i * n - k * k
    return (
        (k - i) * (k - i - 1) * (n - k - i) * (n - k - i - 1)
        - 2 * i * i * (k - i) * (n - k - i)
        + i * i * (i - 1) ** 2
    )


def _check_dual(n: int, k: int, i: int, j: int) -> None:
    if n < 2 * k or k < 1 or not (0 <= i <= k) or j not in (1, 2) or (j == 2 and k < 2):
        raise InvalidIndices(f"closed dual eigenvalue undefined for n={n}, k={k}, i={i}, j={j}")


def dual_scale(n: int, k: int, j: int) -> Fraction:
    """c_1 = k(n-k)/f_1 and c_2 = k(k-1)(n-k)(n-k-1)/f_2."""
    f = multiplicity_from_P(n, k, j)
    if j == 1:
        return k * (n - k) / f
    return k * (k - 1) * (n - k) * (n - k - 1) / f


def dual_eigenvalue_closed(n: int, k: int, i: int, j: int) -> Fraction:
    """Q_ij for j in {1, 2} from the closed polynomial forms."""
    _check_dual(n, k, i, j)
    return dual_eigenvalue_numerator(n, k, i, j) / dual_scale(n, k, j)


def macwilliams_transform(tables: SchemeTables, dist: InnerDistribution) -> tuple[Fraction, ...]:
    """Return (aQ)_j = sum_i Q_ij a_i for j = 0..k."""
    k = tables.k
    if len(dist.a) != k + 1:
        raise DimensionMismatch(f"inner distribution has {len(dist.a)} entries, J({tables.n},{k}) needs {k + 1}")
    return tuple(
        sum((tables.Q[i][j] * dist.a[i] for i in range(k + 1)), Fraction(0)) for j in range(k + 1)
    )


def gamma_coefficients(n: int, k: int) -> tuple[int, ...]:
    """gamma_i = -i(n-2)(kn - in - k^2 + i) for i = 0..k-1."""
    if k < 3 or n < 2 * k:
        raise InvalidParameters(f"need k >= 3 and n >= 2k, got n={n}, k={k}")
    return tuple(-i * (n - 2) * (k * n - i * n - k * k + i) for i in range(k))


def gamma_from_tables(n: int, k: int) -> tuple[Fraction, ...]:
    """alpha_i - (k-1)(n-k-1) beta_i with alpha, beta taken from the inverted Q."""
    t = scheme_tables(n, k)
    c1 = Fraction(k * (n - k), t.f[1])
    c2 = Fraction(k * (k - 1) * (n - k) * (n - k - 1), t.f[2])
    return tuple(c2 * t.Q[i][2] - (k - 1) * (n - k - 1) * c1 * t.Q[i][1] for i in range(k))


@dataclass(frozen=True)
class LPOutcome:
    optimum: Fraction | None
    witness: tuple[Fraction, ...] | None  # a_1 .. a_{k-1}
    status: str


def lp_max_regular_intersecting(n: int, k: int, require_regular: bool = True) -> LPOutcome:
    """Delsarte LP bound for (regular) intersecting families in J(n, k).

    Maximise 1 + a_1 + ... + a_{k-1} over a_i >= 0 with a_0 = 1, a_k = 0,
    every MacWilliams entry j >= 1 nonnegative and, for regular families,
    sum_i (kn - in - k^2) a_i = 0.
    """
    _check_nk(n, k)
    t = scheme_tables(n, k)
    nvar = k - 1
    c = [1] * nvar
    A_ub, b_ub = [], []
    for j in range(1, k + 1):
        # sum_{i>=1} Q_ij a_i >= -Q_0j
        A_ub.append([-t.Q[i][j] for i in range(1, k)])
        b_ub.append(t.Q[0][j])
    A_eq, b_eq = [], []
    if require_regular:
        A_eq.append([k * n - i * n - k * k for i in range(1, k)])
        b_eq.append(-(k * n - k * k))
    res = simplex.maximize(c, A_ub, b_ub, A_eq, b_eq)
    if res.status == simplex.INFEASIBLE:
        return LPOutcome(None, None, INFEASIBLE)
    if res.status != simplex.OPTIMAL:
        raise InvalidParameters(f"LP unexpectedly {res.status} for n={n}, k={k}")
    return LPOutcome(1 + res.value, res.x, OPTIMAL)

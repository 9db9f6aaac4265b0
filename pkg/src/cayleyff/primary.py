"""Counting and enumerating monic irreducible and primary polynomials over F_q."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import poly
from .errors import SizeGuard, UsageError
from .field import SIZE_GUARD, BaseField


def divisors(k: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i * i != k:
                large.append(k // i)
        i += 1
    return small + large[::-1]


def mobius(k: int) -> int:
    if k < 1:
        raise UsageError("mobius is defined for k >= 1")
    sign = 1
    r = 2
    while r * r <= k:
        if k % r == 0:
            k //= r
            if k % r == 0:
                return 0
            sign = -sign
        r += 1
    if k > 1:
        sign = -sign
    return sign


def count_irreducibles(base: BaseField | int, k: int) -> int:
    """pi_k: the number of monic irreducibles of degree k over F_q."""
    q = base if isinstance(base, int) else base.q
    total = sum(mobius(s) * q ** (k // s) for s in divisors(k))
    assert total % k == 0
    return total // k


def count_primary(base: BaseField | int, d: int) -> int:
    """|P_d| = sum over k | d of pi_k."""
    return sum(count_irreducibles(base, k) for k in divisors(d))


@dataclass(frozen=True)
class PrimaryRecord:
    poly: tuple
    radical: tuple
    lam: int

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


def _check_budget(base: BaseField, k: int):
    if base.q**k > SIZE_GUARD:
        raise SizeGuard(f"q^k = {base.q}^{k} exceeds the enumeration guard")


def _monic_rows(q: int, k: int) -> np.ndarray:
    t = np.arange(q**k, dtype=np.int64)
    rows = np.empty((q**k, k + 1), dtype=np.int64)
    for i in range(k):
        rows[:, i] = t % q
        t //= q
    rows[:, k] = 1
    return rows


@lru_cache(maxsize=256)
def _irreducible_indices(base: BaseField, k: int) -> np.ndarray:
    """Canonical indices t of the degree-k monic irreducibles.

    Sieve: a monic of degree k is reducible iff it is a product of an
    irreducible of degree i <= k/2 with some monic of degree k - i.
    """
    q = base.q
    if k == 1:
        return np.arange(q, dtype=np.int64)
    at, mt = base.add_table, base.mul_table
    reducible = np.zeros(q**k, dtype=bool)
    place = q ** np.arange(k, dtype=np.int64)
    for i in range(1, k // 2 + 1):
        A = _monic_rows(q, i)[_irreducible_indices(base, i)]
        B = _monic_rows(q, k - i)
        block = max(1, (1 << 20) // len(B))
        for s in range(0, len(A), block):
            a = A[s : s + block]
            prod = np.zeros((len(a), len(B), k + 1), dtype=np.int64)
            for u in range(i + 1):
                for v in range(k - i + 1):
                    prod[:, :, u + v] = at[prod[:, :, u + v], mt[a[:, u][:, None], B[:, v][None, :]]]
            reducible[(prod[:, :, :k] @ place).ravel()] = True
    return np.flatnonzero(~reducible)


def enumerate_irreducibles(base: BaseField, k: int) -> list[tuple]:
    """All monic irreducibles of degree k, in canonical order."""
    if k < 1:
        raise UsageError("degree must be >= 1")
    _check_budget(base, k)
    rows = _monic_rows(base.q, k)[_irreducible_indices(base, k)]
    return [tuple(int(c) for c in r) for r in rows]


def enumerate_irr_divisors(base: BaseField, d: int) -> list[tuple]:
    """I_d: monic irreducibles whose degree divides d (degree ascending, then canonical)."""
    out = []
    for k in divisors(d):
        out.extend(enumerate_irreducibles(base, k))
    return out


@lru_cache(maxsize=256)
def _primary_cached(base: BaseField, d: int) -> tuple:
    out = []
    for k in divisors(d):
        for h in enumerate_irreducibles(base, k):
            out.append(PrimaryRecord(poly.power(base, h, d // k), h, k))
    return tuple(out)


def enumerate_primary(base: BaseField, d: int) -> list[PrimaryRecord]:
    """P_d as records ``h^(d/k)`` for every irreducible h of degree k | d."""
    if d < 1:
        raise UsageError("degree must be >= 1")
    _check_budget(base, d)
    return list(_primary_cached(base, d))


def export_text(polys) -> str:
    """One polynomial per line in coefficient-list format."""
    lines = []
    for g in polys:
        g = g.poly if isinstance(g, PrimaryRecord) else g
        lines.append(poly.format_list(g))
    return "\n".join(lines) + ("\n" if lines else "")

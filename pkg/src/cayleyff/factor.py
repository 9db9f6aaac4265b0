"""Integer factorization of group orders q^n - 1.

Trial division up to a fixed bound, then Brent's variant of Pollard rho
with a deterministic seed. Anything that survives the rho budget raises
GiveUp so the caller can pass the factors in explicitly.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass

from .errors import BadHint, GiveUp, UsageError

TRIAL_BOUND = 10**6
RHO_ITERATIONS = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= 3_317_044_064_679_887_385_961_981:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(16)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, primes strictly increasing."""

    factors: tuple  # of (prime, exponent)

    @property
    def value(self) -> int:
        v = 1
        for p, k in self.factors:
            v *= p**k
        return v

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        return format_factorization(self)

    def to_json(self) -> list:
        return [[p, k] for p, k in self.factors]


def _from_counts(counts: dict) -> Factorization:
    return Factorization(tuple(sorted(counts.items())))


_PRIMES_CACHE: list[int] = []


def _small_primes() -> list[int]:
    if not _PRIMES_CACHE:
        n = TRIAL_BOUND
        sieve = bytearray([1]) * (n + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(n) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
        _PRIMES_CACHE.extend(i for i in range(n + 1) if sieve[i])
    return _PRIMES_CACHE


def _brent(n: int, rng: random.Random, budget: int) -> int | None:
    if n % 2 == 0:
        return 2
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = qq = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    qq = qq * abs(x - y) % n
                g = math.gcd(qq, n)
                k += m
            r *= 2
            spent += r
            if spent > budget:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factor(N: int, hint: Factorization | None = None, *, seed: int = 0,
           rho_iterations: int = RHO_ITERATIONS) -> Factorization:
    """Complete factorization of N >= 2 (a valid hint short-circuits the work)."""
    if N < 2:
        raise UsageError("factor needs N >= 2")
    if hint is not None:
        if hint.value != N:
            raise BadHint(f"hint {hint} multiplies to {hint.value}, not {N}")
        for p, k in hint.factors:
            if k < 1 or not is_prime(p):
                raise BadHint(f"hint contains non-prime {p}")
        if list(hint.primes) != sorted(set(hint.primes)):
            raise BadHint("hint primes must be strictly increasing")
        return hint
    counts: dict[int, int] = {}
    m = N
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    rng = random.Random(seed)
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        r = math.isqrt(v)
        if r * r == v:
            stack += [r, r]
            continue
        g = _brent(v, rng, rho_iterations)
        if g is None:
            raise GiveUp(f"cofactor {v} of {N} resisted factoring; pass the factors explicitly")
        stack += [g, v // g]
    return _from_counts(counts)


_FACTOR_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_factorization(text: str) -> Factorization:
    """Parse ``"3^2*5*7*13"`` (spaces allowed, ``^1`` optional)."""
    counts: dict[int, int] = {}
    s = text.replace(" ", "")
    if not s:
        raise BadHint("empty factorization")
    for tok in s.split("*"):
        m = _FACTOR_TERM.match(tok)
        if not m:
            raise BadHint(f"cannot parse factor {tok!r}")
        p, k = int(m.group(1)), int(m.group(2) or 1)
        if k < 1:
            raise BadHint(f"bad exponent in {tok!r}")
        counts[p] = counts.get(p, 0) + k
    return _from_counts(counts)


def format_factorization(fact: Factorization) -> str:
    return " * ".join(f"{p}^{k}" for p, k in fact.factors)

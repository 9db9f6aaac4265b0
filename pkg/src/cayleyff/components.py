"""Component counting from the factorization of N = q^n - 1.

The components of G_d are the cosets of H = <E_d> in the cyclic group
Gamma_f, so their number is the index [Gamma_f : H]. Two methods here
compute it without touching all N vertices: a descent through maximal
subgroups driven by power tests, and the lcm of element orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import UsageError, ZeroElement
from .factor import Factorization
from .field import Xelt
from .graph import GraphSpec, thm8_holds
from .primary import count_primary


def _check_fact(N: int, fact: Factorization):
    if fact.value != N:
        raise UsageError(f"factorization {fact} does not multiply to N={N}")


def element_order(a: Xelt, fact: Factorization) -> int:
    """Exact multiplicative order of a nonzero element."""
    if not a:
        raise ZeroElement("zero has no multiplicative order")
    ext = a.ext
    _check_fact(ext.N, fact)
    one = ext.one.c
    order = ext.N
    for p, k in fact.factors:
        for _ in range(k):
            if ext._pow(a.c, order // p) == one:
                order //= p
            else:
                break
    return order


@dataclass
class DescentResult:
    index: int
    chain: list = field(default_factory=list)
    fast_path: bool = False


def components_descent(spec: GraphSpec, fact: Factorization, *, full: bool = False) -> DescentResult:
    """Index [Gamma_f : H] by descending through maximal subgroups.

    Holding the current index I, a prime p with I*p | N is accepted when
    g(alpha)^(N/(I*p)) = 1 for every g in P_d, i.e. H lies in the unique
    subgroup of index I*p. Primes are tried in increasing order each
    round, so the returned chain is canonical. Unless ``full`` is set,
    instances in the connectivity regime n < q^(d/2)+1 return index 1
    without any power test.
    """
    ext = spec.ext
    N = ext.N
    _check_fact(N, fact)
    if not full and thm8_holds(spec.q, spec.n, spec.d):
        return DescentResult(1, [], fast_path=True)
    one = ext.one.c
    gens = [v.c for v in spec.connection.values]
    index = 1
    chain: list[int] = []
    while True:
        for p in fact.primes:
            if (N // index) % p:
                continue
            e = N // (index * p)
            assert e * index * p == N
            if all(ext._pow(g, e) == one for g in gens):
                index *= p
                chain.append(p)
                break
        else:
            return DescentResult(index, chain)


def components_order_lcm(spec: GraphSpec, fact: Factorization) -> int:
    """N / lcm of the orders of the connection elements (|H| in a cyclic group)."""
    _check_fact(spec.N, fact)
    L = 1
    for v in spec.connection.values:
        L = math.lcm(L, element_order(v, fact))
    return spec.N // L


def theorem14_bound(spec: GraphSpec) -> int:
    return thm14_bound(spec.q, spec.n, spec.d)


def thm14_bound(q: int, n: int, d: int) -> int:
    """floor((q^n - 1) / C(|P_d| + 1, ceil(n/d) - 1)).

    A vanishing binomial (more factors requested than available) makes the
    quotient vacuous; the trivial bound q^n - 1 is returned then.
    """
    binom = math.comb(count_primary(q, d) + 1, -(-n // d) - 1)
    return (q**n - 1) // max(binom, 1)

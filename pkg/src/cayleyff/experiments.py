"""Drivers that check the connectivity, diameter and counting statements numerically."""

from __future__ import annotations

import csv
import io
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import poly
from .components import components_descent, thm14_bound
from .errors import BudgetExceeded, Disconnected, EllDoesNotDivide, NotApplicable, SizeGuard, UsageError
from .factor import Factorization, factor
from .field import SIZE_GUARD, BaseField, ExtField, element_degrees, ext_field_new
from .graph import GraphSpec, diameter_bfs, thm8_holds
from .primary import count_irreducibles, count_primary, enumerate_irr_divisors, enumerate_irreducibles
from .spectrum import build_log_table, eigenvalues, find_generator

INT64_MAX = 2**63 - 1


# -- diameter ----------------------------------------------------------------

def thm15_bound(q: int, n: int, d: int) -> float:
    """2n/d + 1 + 4(n/d) log(n-1) / (d log q - 2 log(n-1)), for n < q^(d/2)+1."""
    if not thm8_holds(q, n, d):
        raise NotApplicable(f"n={n} >= q^(d/2)+1 for q={q}, d={d}")
    if n == 2:
        return 2 * n / d + 1
    ln = math.log(n - 1)
    return 2 * n / d + 1 + 4 * (n / d) * ln / (d * math.log(q) - 2 * ln)


def proof_threshold(q: int, n: int, d: int) -> float:
    """2n / (d - 2 log_q(n-1)): the product length that makes every count positive."""
    if not thm8_holds(q, n, d):
        raise NotApplicable(f"n={n} >= q^(d/2)+1 for q={q}, d={d}")
    return 2 * n / (d - 2 * math.log(n - 1) / math.log(q)) if n > 2 else 2 * n / d


def cor16_applies(q: int, n: int, d: int) -> bool:
    """q^d > (n-1)^(4n/d + 2), compared as q^(d*d) > (n-1)^(4n + 2d)."""
    return q ** (d * d) > (n - 1) ** (4 * n + 2 * d)


def diameter_bound(spec: GraphSpec) -> tuple[float, bool]:
    q, n, d = spec.q, spec.n, spec.d
    return thm15_bound(q, n, d), cor16_applies(q, n, d)


@dataclass
class DiameterRecord:
    D_actual: int
    bound: float
    ok: bool
    threshold: int
    threshold_ok: bool
    cor16: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_diameter(spec: GraphSpec, fact: Factorization) -> DiameterRecord:
    """BFS diameter against the displayed bound (and the proof's ceil threshold)."""
    bound, cor16 = diameter_bound(spec)
    res = components_descent(spec, fact, full=True)
    if res.index != 1:
        raise Disconnected(f"{res.index} components; diameter is infinite")
    D = diameter_bfs(spec)
    if D is None:
        raise Disconnected("BFS did not reach every vertex")
    thr = math.ceil(proof_threshold(spec.q, spec.n, spec.d) - 1e-12)
    ok = D <= bound
    if cor16:
        ok = ok and D <= 2 * spec.n / spec.d + 1
    return DiameterRecord(D, bound, ok, thr, D <= thr, cor16)


# -- product counts ----------------------------------------------------------

def count_products(spec: GraphSpec, k: int, budget: int = 10**9) -> np.ndarray:
    """N_k(beta) for every vertex index beta (slot 0, the zero element, stays 0).

    Built by k-fold neighbour summation: N_{j+1}[v * c] += N_j[v].
    """
    if k < 1:
        raise UsageError("k must be >= 1")
    spec.ext.check_size()
    if spec.N * k * spec.connection.size > budget:
        raise BudgetExceeded(f"N*k*|P_d| exceeds budget {budget}")
    if spec.connection.size**k > INT64_MAX:
        raise BudgetExceeded("counts could overflow 64-bit integers")
    P = spec.perms
    cur = np.zeros(spec.ext.size, dtype=np.int64)
    cur[1] = 1
    for _ in range(k):
        nxt = np.zeros_like(cur)
        for row in P:
            nxt[row] += cur
        cur = nxt
    return cur


# -- disconnected instances ----------------------------------------------------

def thm9_hypothesis(q: int, n: int, d: int, ell: int) -> bool:
    """n >= 2d + 2(|P_d|+1) log_q(ell), checked as q^(n-2d) >= ell^(2(|P_d|+1))."""
    if n - 2 * d < 0:
        return False
    return q ** (n - 2 * d) >= ell ** (2 * (count_primary(q, d) + 1))


@dataclass
class SearchResult:
    q: int
    n: int
    d: int
    ell: int
    hypothesis: bool
    scanned: int
    hits: list = field(default_factory=list)  # (f, components)

    def to_json(self) -> dict:
        return {
            "q": self.q, "n": self.n, "d": self.d, "ell": self.ell,
            "hypothesis": self.hypothesis, "scanned": self.scanned,
            "hits": [{"f": poly.format_list(f), "components": c} for f, c in self.hits],
        }


def _components_for(args):
    base, f, d, fact = args
    ext = ExtField(base, f)
    return components_descent(GraphSpec(ext, d), fact, full=True).index


def search_disconnected(base: BaseField, n: int, d: int, ell: int,
                        fact_hint: Factorization | None = None,
                        budget: int = 10**6, jobs: int = 1) -> SearchResult:
    """Scan degree-n irreducibles f for component counts divisible by ell."""
    q = base.q
    N = q**n - 1
    if ell <= 1 or N % ell:
        raise EllDoesNotDivide(f"ell={ell} does not divide q^n-1={N}")
    if count_irreducibles(base, n) > budget:
        raise BudgetExceeded(f"{count_irreducibles(base, n)} irreducibles exceeds budget {budget}")
    fact = factor(N, fact_hint)
    fs = enumerate_irreducibles(base, n)
    work = [(base, f, d, fact) for f in fs]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            counts = list(ex.map(_components_for, work, chunksize=16))
    else:
        counts = [_components_for(w) for w in work]
    hits = [(f, c) for f, c in zip(fs, counts) if c % ell == 0]
    return SearchResult(q, n, d, ell, thm9_hypothesis(q, n, d, ell), len(fs), hits)


def count_N_ell(base: BaseField, n: int, d: int, ell: int, fact: Factorization | None = None,
                ext: ExtField | None = None) -> int:
    """#{beta of degree n : h(beta) is an ell-th power for every h in I_d}, by brute force."""
    q = base.q
    N = q**n - 1
    if ell <= 1 or N % ell:
        raise EllDoesNotDivide(f"ell={ell} does not divide q^n-1={N}")
    if N > SIZE_GUARD:
        raise SizeGuard(f"N={N} exceeds the brute-force guard")
    if fact is not None and fact.value != N:
        raise UsageError("factorization does not match q^n-1")
    if ext is None:
        ext = ExtField(base, enumerate_irreducibles(base, n)[0])
    idx = np.arange(1, ext.size, dtype=np.int64)
    keep = element_degrees(ext, idx) == n
    B = ext.coeff_array(idx[keep])
    ok = np.ones(len(B), dtype=bool)
    one = np.zeros(n, dtype=np.int64)
    one[0] = 1
    for h in enumerate_irr_divisors(base, d):
        acc = np.zeros_like(B)
        for c in reversed(h):
            acc = ext.vmul(acc, B)
            acc[:, 0] = ext.vadd(acc[:, 0], np.full(len(B), c))
        ok &= np.all(ext.vpow(acc, N // ell) == one, axis=1)
    return int(ok.sum())


# -- sweep ---------------------------------------------------------------------

SWEEP_COLUMNS = ["q", "n", "d", "f", "regime", "components", "thm14_bound",
                 "diameter", "diameter_bound", "delta_star", "seconds"]


@dataclass
class SweepGrid:
    base: BaseField
    ns: list
    ds: list
    ell: int | None = None
    sample: int | None = None
    seed: int = 0
    diameter: bool = True
    spectrum: bool = True
    timing: bool = False


def regime(q: int, n: int, d: int, ell: int) -> str:
    if thm8_holds(q, n, d):
        return "connected"
    if thm9_hypothesis(q, n, d, ell):
        return "disconnectable"
    return "gap"


def smallest_prime(fact: Factorization) -> int:
    return fact.primes[0]


def _sweep_row(args) -> dict:
    base, f, d, fact, ell, want_diam, want_spec, timing = args
    t0 = time.perf_counter()
    ext = ExtField(base, f)
    spec = GraphSpec(ext, d)
    q, n = base.q, ext.n
    comps = components_descent(spec, fact, full=True).index
    row = {
        "q": q, "n": n, "d": d, "f": poly.format_list(f),
        "regime": regime(q, n, d, ell),
        "components": comps,
        "thm14_bound": thm14_bound(q, n, d),
        "diameter": "",
        "diameter_bound": "",
        "delta_star": "",
        "seconds": "",
    }
    if thm8_holds(q, n, d):
        row["diameter_bound"] = f"{thm15_bound(q, n, d):.6f}"
    small = ext.N <= SIZE_GUARD
    if want_diam and small:
        D = diameter_bfs(spec)
        row["diameter"] = "inf" if D is None else D
    if want_spec and small:
        table = build_log_table(ext, find_generator(ext, fact))
        row["delta_star"] = f"{eigenvalues(spec, table).delta_certified:.9f}"
    if timing:
        row["seconds"] = f"{time.perf_counter() - t0:.6f}"
    return row


def connectivity_sweep(grid: SweepGrid, jobs: int = 1) -> list[dict]:
    """One row per (n, d, f); f runs over all (or a seeded sample of) degree-n irreducibles."""
    base = grid.base
    q = base.q
    rng = random.Random(grid.seed)
    work = []
    for n in grid.ns:
        N = q**n - 1
        fact = factor(N)
        ell = grid.ell if grid.ell is not None else smallest_prime(fact)
        if N % ell:
            raise EllDoesNotDivide(f"ell={ell} does not divide {N}")
        fs = enumerate_irreducibles(base, n)
        if grid.sample is not None and grid.sample < len(fs):
            fs = [fs[i] for i in sorted(rng.sample(range(len(fs)), grid.sample))]
        for d in grid.ds:
            if not 1 <= d < n:
                continue
            for f in fs:
                work.append((base, f, d, fact, ell, grid.diameter, grid.spectrum, grid.timing))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_sweep_row, work, chunksize=8))
    return [_sweep_row(w) for w in work]


def sweep_violations(rows: list[dict]) -> list[str]:
    """Rows contradicting a proven statement (connectivity, component bound, diameter)."""
    bad = []
    for r in rows:
        tag = f"q={r['q']} n={r['n']} d={r['d']} f={r['f']}"
        if r["regime"] == "connected" and r["components"] != 1:
            bad.append(f"{tag}: {r['components']} components in the connected regime")
        if r["components"] > r["thm14_bound"]:
            bad.append(f"{tag}: components exceed the combinatorial bound")
        if r["diameter_bound"] and isinstance(r["diameter"], int) and r["diameter"] > float(r["diameter_bound"]):
            bad.append(f"{tag}: diameter {r['diameter']} exceeds bound {r['diameter_bound']}")
    return bad


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def connected_fraction(rows: list[dict]) -> dict:
    """Empirical share of connected f per (q, n, d)."""
    groups: dict = {}
    for r in rows:
        key = f"{r['q']},{r['n']},{r['d']}"
        tot, con = groups.get(key, (0, 0))
        groups[key] = (tot + 1, con + (r["components"] == 1))
    return {k: con / tot for k, (tot, con) in sorted(groups.items())}

"""Adjacency spectra of G_d and its Lambda-weighted version via characters.

Every multiplicative character chi_j(gamma^k) = exp(2 pi i j k / N) is an
eigenvector of both adjacency operators, with eigenvalue
sum_{g in P_d} w(g) chi_j(g(alpha)) where w = 1 (unweighted) or
w = Lambda(g) (weighted). With a discrete-log table for a generator gamma
the whole spectrum is a length-N sum, or one inverse FFT.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .components import element_order
from .errors import NotAGenerator, WrongKind
from .factor import Factorization
from .field import ExtField, Xelt
from .graph import GraphSpec

TRANSFORM_THRESHOLD = 1 << 16
REL_TOL = 1e-6
ABS_TOL = 1e-6


def find_generator(ext: ExtField, fact: Factorization) -> Xelt:
    """First element in vertex-index order whose order is N."""
    N = ext.N
    for idx in range(1, ext.size):
        a = ext.from_index(idx)
        if element_order(a, fact) == N:
            return a
    raise AssertionError("cyclic group without a generator")


@dataclass(frozen=True)
class LogTable:
    generator: Xelt
    logs: np.ndarray  # logs[v] = k with gamma^k = element of index v; logs[0] = -1

    @property
    def N(self) -> int:
        return self.generator.ext.N


def build_log_table(ext: ExtField, gamma: Xelt) -> LogTable:
    ext.check_size()
    N = ext.N
    step = ext.mul_perms([gamma])[0].tolist()
    logs = [-1] * ext.size
    v = 1
    for k in range(N):
        if logs[v] != -1:
            raise NotAGenerator(f"gamma has order {k} < N = {N}")
        logs[v] = k
        v = step[v]
    if v != 1:
        raise NotAGenerator("walk did not return to 1")
    return LogTable(gamma, np.array(logs, dtype=np.int64))


@dataclass
class SpectrumReport:
    kind: str
    trivial_eigenvalue: float
    trivial_multiplicity: int
    eigenvalues: np.ndarray
    subgroup_order: int
    max_nontrivial_modulus: float
    weil_bound: float
    thm17_bound: float
    generator: int
    method: str
    delta_certified: float | None = None

    @property
    def N(self) -> int:
        return len(self.eigenvalues)

    def trivial_on_H(self) -> np.ndarray:
        """Characters chi_j trivial on H are exactly j = 0 mod |H|."""
        return np.arange(self.N) % self.subgroup_order == 0

    def to_csv(self) -> str:
        lam = self.eigenvalues
        triv = self.trivial_on_H()
        rows = ["j,re,im,abs,trivial_on_H"]
        for j in range(self.N):
            z = lam[j]
            rows.append(f"{j},{z.real:.12g},{z.imag:.12g},{abs(z):.12g},{int(triv[j])}")
        return "\n".join(rows) + "\n"

    def summary(self) -> dict:
        return {
            "kind": self.kind,
            "trivial_eigenvalue": self.trivial_eigenvalue,
            "trivial_multiplicity": self.trivial_multiplicity,
            "subgroup_order": self.subgroup_order,
            "max_nontrivial_modulus": self.max_nontrivial_modulus,
            "weil_bound": self.weil_bound,
            "thm17_bound": self.thm17_bound,
            "delta_star": self.delta_certified,
            "generator": self.generator,
            "method": self.method,
        }


def character_sums(N: int, logs: np.ndarray, weights: np.ndarray, method: str) -> np.ndarray:
    """lambda_j = sum_c w_c exp(2 pi i j logs_c / N) for j in [0, N)."""
    if method == "transform":
        v = np.zeros(N, dtype=np.float64)
        np.add.at(v, logs, weights.astype(np.float64))
        return np.fft.ifft(v) * N
    roots = np.exp(2j * np.pi * np.arange(N) / N)
    out = np.empty(N, dtype=np.complex128)
    w = weights.astype(np.float64)
    chunk = max(1, (1 << 22) // max(1, len(logs)))
    for s in range(0, N, chunk):
        j = np.arange(s, min(N, s + chunk), dtype=np.int64)
        out[s : s + len(j)] = roots[(j[:, None] * logs[None, :]) % N] @ w
    return out


def eigenvalues(spec: GraphSpec, table: LogTable, kind: str = "unweighted", method: str = "auto") -> SpectrumReport:
    if kind not in ("unweighted", "weighted"):
        raise WrongKind(f"unknown spectrum kind {kind!r}")
    ext = spec.ext
    ext.check_size()
    N = ext.N
    cs = spec.connection
    L = table.logs[cs.indices]
    w = cs.weights if kind == "weighted" else np.ones(cs.size, dtype=np.int64)
    if method == "auto":
        method = "transform" if N > TRANSFORM_THRESHOLD else "direct"
    lam = character_sums(N, L, w, method)
    triv = float(w.sum())
    g = N
    for x in L.tolist():
        g = math.gcd(g, x)
    H = N // g
    mult = int(np.count_nonzero(np.abs(lam - triv) < REL_TOL * triv))
    nontriv = np.arange(N) % H != 0
    maxnt = float(np.abs(lam[nontriv]).max()) if nontriv.any() else 0.0
    q, n, d = spec.q, spec.n, spec.d
    return SpectrumReport(
        kind=kind,
        trivial_eigenvalue=triv,
        trivial_multiplicity=mult,
        eigenvalues=lam,
        subgroup_order=H,
        max_nontrivial_modulus=maxnt,
        weil_bound=(n - 1) * q ** (d / 2),
        thm17_bound=(n + d - 1) / d * q ** (d / 2),
        generator=table.generator.index,
        method=method,
        delta_certified=1.0 - maxnt / triv,
    )


def trivial_multiplicity(report: SpectrumReport) -> int:
    return report.trivial_multiplicity


@dataclass
class Verdict:
    ok: bool
    margin: float
    detail: dict

    def to_json(self) -> dict:
        return {"ok": self.ok, "margin": self.margin, **self.detail}


def weil_check(report: SpectrumReport, spec: GraphSpec, tol: float = ABS_TOL) -> Verdict:
    """max_{j != 0} |S_d(chi_j)| <= (n-1) q^(d/2) on a weighted report."""
    if report.kind != "weighted":
        raise WrongKind("the character-sum bound needs a weighted report")
    bound = (spec.n - 1) * spec.q ** (spec.d / 2)
    worst = float(np.abs(report.eigenvalues[1:]).max()) if report.N > 1 else 0.0
    return Verdict(worst <= bound + tol, bound - worst, {"bound": bound, "max_abs": worst})


def _hypothesis(lhs: int, q: int, d: int, delta: Fraction) -> bool:
    # lhs <= q^(d/2) (1 - delta), squared to stay in exact arithmetic
    one_minus = 1 - delta
    if one_minus <= 0:
        return False
    return lhs * lhs <= q**d * one_minus * one_minus


def expander_check(report: SpectrumReport, spec: GraphSpec, delta, tol: float = ABS_TOL) -> Verdict:
    """Spectral-gap check for the unweighted or weighted operator.

    ``delta`` may be a float, Fraction or string like ``"2/3"``; the
    hypothesis is compared exactly. When it fails the verdict says so but
    the empirical delta* is still reported.
    """
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    q, n, d = spec.q, spec.n, spec.d
    lhs = n + d - 1 if report.kind == "unweighted" else n - 1
    held = _hypothesis(lhs, q, d, delta)
    limit = report.trivial_eigenvalue * float(1 - delta)
    within = report.max_nontrivial_modulus <= limit + tol
    detail = {
        "hypothesis_met": held,
        "status": ("pass" if within else "fail") if held else "hypothesis-not-met",
        "limit": limit,
        "max_nontrivial": report.max_nontrivial_modulus,
        "delta": float(delta),
        "delta_star": report.delta_certified,
    }
    return Verdict(within if held else False, limit - report.max_nontrivial_modulus, detail)

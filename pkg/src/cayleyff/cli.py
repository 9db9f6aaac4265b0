"""``cayley-ff`` command line.

Every subcommand prints one JSON document on stdout. Wall-clock numbers
live under the ``timing`` key so the rest is reproducible byte for byte.
Exit codes: 0 ok, 1 a checked inequality or a cross-method agreement
failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import poly
from .cache import DiskCache
from .components import components_descent, components_order_lcm, thm14_bound
from .errors import CayleyFFError, GiveUp, NotApplicable, UsageError
from .experiments import (
    SweepGrid,
    connected_fraction,
    connectivity_sweep,
    cor16_applies,
    proof_threshold,
    regime,
    search_disconnected,
    sweep_csv,
    sweep_violations,
    thm15_bound,
    verify_diameter,
)
from .factor import factor, format_factorization, parse_factorization
from .field import ExtField, base_field_new, ext_field_new, monic_from_index
from .graph import FORMATS, GraphSpec, components_bfs, diameter_bfs, export_graph, subgroup_closure, thm8_holds
from .primary import count_irreducibles, count_primary
from .spectrum import eigenvalues, expander_check, find_generator, weil_check

METHODS = ("bfs", "closure", "descent", "lcm", "spectrum")


class Violation(Exception):
    pass


def _emit(doc: dict, timing: dict | None = None):
    if timing is not None:
        doc["timing"] = timing
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _base(args):
    modulus = poly.parse(args.base_modulus) if args.base_modulus else None
    return base_field_new(args.p, args.m, modulus)


def _canonical_f(base, n: int):
    for t in range(base.q**n):
        cand = monic_from_index(base.q, n, t)
        if poly.is_irreducible(base, cand):
            return cand
    raise AssertionError("no irreducible found")


def _pick_f(args, base, n: int, cache: DiskCache):
    if args.f:
        f = poly.parse(args.f, base)
        if len(f) - 1 != n:
            raise UsageError(f"--f has degree {len(f) - 1}, --n is {n}")
        return f
    if args.random_f:
        fs = cache.irreducibles(base, n)
        return random.Random(args.seed).choice(fs)
    return _canonical_f(base, n)


def _ext(args, cache, allow_large=False) -> ExtField:
    base = _base(args)
    n = int(args.n)
    f = _pick_f(args, base, n, cache)
    return ext_field_new(base, f, force=args.force or allow_large)


def _fact(args, N: int):
    hint = parse_factorization(args.factors) if args.factors else None
    return factor(N, hint, seed=args.seed)


def _instance(spec: GraphSpec, fact=None) -> dict:
    ext = spec.ext
    doc = {
        "p": ext.base.p, "m": ext.base.m, "q": ext.q, "n": ext.n, "d": spec.d,
        "base_modulus": poly.format_list(ext.base.modulus) if ext.base.m > 1 else None,
        "f": poly.format_list(ext.f),
        "N": ext.N,
    }
    if fact is not None:
        doc["factorization"] = format_factorization(fact)
    return doc


# -- subcommands -------------------------------------------------------------

def cmd_info(args, cache):
    base = _base(args)
    n, d = int(args.n), args.d
    q = base.q
    if not 1 <= d < n:
        raise UsageError("need 1 <= d < n")
    N = q**n - 1
    doc = {
        "p": base.p, "m": base.m, "q": q, "n": n, "d": d, "N": N,
        "P_d": count_primary(q, d), "pi_n": count_irreducibles(q, n),
        "thm14_bound": thm14_bound(q, n, d),
        "cor16_applies": cor16_applies(q, n, d) if thm8_holds(q, n, d) else None,
    }
    if args.f:
        f = poly.parse(args.f, base)
        ext_field_new(base, f, force=True)
        doc["f"] = poly.format_list(f)
    try:
        doc["thm15_bound"] = thm15_bound(q, n, d)
        doc["proof_threshold"] = proof_threshold(q, n, d)
    except NotApplicable:
        doc["thm15_bound"] = None
        doc["proof_threshold"] = None
    if thm8_holds(q, n, d):
        doc["regime"] = "connected"
    else:
        ell = args.ell
        if ell is None:
            fact = _fact(args, N)
            ell = fact.primes[0]
            doc["factorization"] = format_factorization(fact)
        doc["ell"] = ell
        doc["regime"] = regime(q, n, d, ell)
    _emit(doc)


def _run_method(method, spec, fact, full, cache):
    if method == "bfs":
        return components_bfs(spec), {}
    if method == "closure":
        return subgroup_closure(spec.connection).index, {}
    if method == "descent":
        res = components_descent(spec, fact, full=full)
        return res.index, {"chain": res.chain, "fast_path": res.fast_path}
    if method == "lcm":
        return components_order_lcm(spec, fact), {}
    if method == "spectrum":
        table = cache.log_table(spec.ext, find_generator(spec.ext, fact))
        rep = eigenvalues(spec, table)
        return rep.trivial_multiplicity, {"generator": rep.generator}
    raise UsageError(f"unknown method {method!r}")


def cmd_components(args, cache):
    t0 = time.perf_counter()
    ext = _ext(args, cache, allow_large=args.method == "descent" or args.method == "lcm")
    spec = GraphSpec(ext, args.d)
    fact = _fact(args, ext.N)
    methods = METHODS if args.method == "all" else (args.method,)
    results, meta, timing = {}, {}, {}
    for m in methods:
        t = time.perf_counter()
        results[m], meta[m] = _run_method(m, spec, fact, args.full_descent or args.method == "all", cache)
        timing[m] = time.perf_counter() - t
    timing["total"] = time.perf_counter() - t0
    doc = _instance(spec, fact)
    doc["methods"] = {m: {"components": results[m], **meta[m]} for m in methods}
    values = set(results.values())
    doc["agree"] = len(values) == 1
    doc["components"] = results[methods[0]] if len(values) == 1 else None
    _emit(doc, timing)
    if len(values) != 1:
        raise Violation(f"methods disagree: {results}")


def cmd_spectrum(args, cache):
    t0 = time.perf_counter()
    ext = _ext(args, cache)
    spec = GraphSpec(ext, args.d)
    fact = _fact(args, ext.N)
    table = cache.log_table(ext, find_generator(ext, fact))
    rep = eigenvalues(spec, table, args.kind, args.spectrum_method)
    out = Path(args.out or f"spectrum-{args.kind}.csv")
    out.write_text(rep.to_csv(), encoding="utf-8", newline="\n")
    doc = _instance(spec, fact)
    doc["spectrum"] = rep.summary()
    doc["csv"] = str(out)
    failed = []
    if args.kind == "weighted":
        v = weil_check(rep, spec)
        doc["weil_check"] = v.to_json()
        if not v.ok:
            failed.append("character-sum bound")
    if args.delta is not None:
        v = expander_check(rep, spec, args.delta)
        doc["expander_check"] = v.to_json()
        if v.detail["hypothesis_met"] and not v.ok:
            failed.append("spectral gap")
    _emit(doc, {"total": time.perf_counter() - t0})
    if failed:
        raise Violation(", ".join(failed))


def cmd_diameter(args, cache):
    t0 = time.perf_counter()
    ext = _ext(args, cache)
    spec = GraphSpec(ext, args.d)
    doc = _instance(spec)
    if thm8_holds(spec.q, spec.n, spec.d):
        fact = _fact(args, ext.N)
        doc["factorization"] = format_factorization(fact)
        rec = verify_diameter(spec, fact)
        doc.update(rec.to_json())
        _emit(doc, {"total": time.perf_counter() - t0})
        if not rec.ok:
            raise Violation(f"diameter {rec.D_actual} exceeds bound {rec.bound}")
        return
    D = diameter_bfs(spec)
    doc.update({"D_actual": "inf" if D is None else D, "bound": None, "ok": None})
    _emit(doc, {"total": time.perf_counter() - t0})


def cmd_search(args, cache):
    t0 = time.perf_counter()
    if args.ell is None:
        raise UsageError("search needs --ell")
    base = _base(args)
    n = int(args.n)
    N = base.q**n - 1
    hint = parse_factorization(args.factors) if args.factors else None
    res = search_disconnected(base, n, args.d, args.ell, hint, jobs=args.jobs)
    out = Path(args.out or "hits.txt")
    out.write_text("".join(f"{poly.format_list(f)} {c}\n" for f, c in res.hits), encoding="utf-8", newline="\n")
    doc = res.to_json()
    doc["N"] = N
    doc["hits_file"] = str(out)
    _emit(doc, {"total": time.perf_counter() - t0})
    if res.hypothesis and not res.hits:
        raise Violation("hypothesis holds but no f with divisible component count")


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def cmd_sweep(args, cache):
    t0 = time.perf_counter()
    base = _base(args)
    grid = SweepGrid(
        base=base, ns=_int_list(args.n), ds=_int_list(args.d_list), ell=args.ell,
        sample=args.sample, seed=args.seed, diameter=not args.no_diameter,
        spectrum=not args.no_spectrum, timing=args.timing,
    )
    rows = connectivity_sweep(grid, jobs=args.jobs)
    csv_path = Path(args.out or "sweep.csv")
    csv_path.write_text(sweep_csv(rows), encoding="utf-8", newline="\n")
    json_path = csv_path.with_suffix(".json")
    facts = {str(n): format_factorization(factor(base.q**n - 1)) for n in grid.ns}
    bad = sweep_violations(rows)
    report = {
        "q": base.q, "ns": grid.ns, "ds": grid.ds, "seed": args.seed,
        "factorizations": facts, "rows": rows,
        "connected_fraction": connected_fraction(rows), "violations": bad,
    }
    json_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n")
    doc = {"rows": len(rows), "csv": str(csv_path), "json": str(json_path), "violations": bad}
    _emit(doc, {"total": time.perf_counter() - t0})
    if bad:
        raise Violation(f"{len(bad)} rows violate a proven bound")


def cmd_export(args, cache):
    ext = _ext(args, cache)
    spec = GraphSpec(ext, args.d)
    text = export_graph(spec, args.format)
    suffix = {"edge-list": "txt", "dot": "dot", "adjacency-csv": "csv"}[args.format]
    out = Path(args.out or f"graph.{suffix}")
    out.write_text(text, encoding="utf-8", newline="\n")
    doc = _instance(spec)
    doc.update({"format": args.format, "file": str(out), "vertices": ext.N,
                "edges": ext.N * spec.connection.size})
    _emit(doc)


# -- parser --------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, n_required=True):
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--m", type=int, default=1, help="q = p^m")
    p.add_argument("--base-modulus", help="modulus of F_q over F_p (default: canonical)")
    p.add_argument("--n", required=n_required, help="extension degree")
    p.add_argument("--f", help='modulus of F_{q^n}, "x^4+x+1" or "[1,1,0,0,1]"')
    p.add_argument("--random-f", action="store_true", help="pick f at random (see --seed)")
    p.add_argument("--factors", help='factorization of q^n-1, e.g. "3^2*5*7*13"')
    p.add_argument("--ell", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true", help="lift the 2^24 size guard")
    p.add_argument("--cache-dir", help="cache directory (env CAYLEYFF_CACHE)")
    p.add_argument("--out", help="output file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cayley-ff", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("info", help="counts and bounds without building the graph")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("components", help="count connected components")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="descent")
    p.add_argument("--full-descent", action="store_true", help="skip the connectivity fast path")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("spectrum", help="eigenvalues via characters")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("unweighted", "weighted"), default="unweighted")
    p.add_argument("--delta", help="check the spectral gap for this delta (e.g. 0.4 or 2/3)")
    p.add_argument("--spectrum-method", choices=("auto", "direct", "transform"), default="auto")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("diameter", help="BFS diameter against the bound")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("search", help="find f with component count divisible by ell")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="component counts over a grid of (n, d, f)")
    _common(p)
    p.add_argument("--d", dest="d_list", default="1", help='degrees, e.g. "1,2" or "1..3"')
    p.add_argument("--sample", type=int, help="seeded sample of f per n instead of all")
    p.add_argument("--timing", action="store_true", help="fill the seconds column")
    p.add_argument("--no-diameter", action="store_true")
    p.add_argument("--no-spectrum", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="write the graph as edge list, dot or adjacency csv")
    _common(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", default="edge-list", help=", ".join(FORMATS))
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cache = DiskCache.from_env(args.cache_dir)
        args.func(args, cache)
    except Violation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (UsageError, GiveUp) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CayleyFFError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

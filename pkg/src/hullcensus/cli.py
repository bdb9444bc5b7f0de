"""Command line interface: ``hullcensus {spectrum,ratios,classify,crosscheck}``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage/domain error,
3 resource guard refusal.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from pathlib import Path

from platformdirs import user_cache_dir

from . import __version__
from .brute_oracle import DEFAULT_GUARD, GuardExceeded, brute_spectrum
from .equivalence import (CENSUS_COLUMNS, ClassificationBoundError, all_classes, census_rows,
                          classify, conjecture_check, mass_formula_check)
from .hull_census import (DomainError, lcd_count_closed, product_count, sendrier_count,
                          spectrum)
from .qcombinatorics import IntegralityError, gaussian_binomial
from .ratio_lab import (DegenerateRatio, display_ratio, predicted_mu, ratio_report,
                        verify_main_theorem)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_MISMATCH, EXIT_DOMAIN, EXIT_GUARD = 0, 1, 2, 3


class Mismatch(Exception):
    pass


# -- output documents ---------------------------------------------------------

def canonical_hash(doc: dict) -> str:
    body = {k: v for k, v in doc.items() if k not in ("timing", "digest")}
    return hashlib.sha256(json.dumps(body, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def _decimal_strings(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, dict):
        return {k: _decimal_strings(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_decimal_strings(v) for v in x]
    return x


def make_document(command: str, params: dict, results: dict, provenance: dict, seconds: float) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": _decimal_strings(params),
        "results": _decimal_strings(results),
        "provenance": provenance,
        "timing": {"seconds": f"{seconds:.3f}"},
    }
    doc["digest"] = canonical_hash(doc)
    return doc


def _csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _table(rows: list[dict], columns) -> str:
    cols = list(columns)
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(x[i]) for x in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


# -- cache ----------------------------------------------------------------------

def cache_dir() -> Path:
    return Path(os.environ.get("HULLCENSUS_CACHE") or user_cache_dir("hullcensus"))


def _cache_path(kind: str, key: dict) -> Path:
    blob = json.dumps({"kind": kind, "schema": SCHEMA_VERSION, **key}, sort_keys=True)
    return cache_dir() / f"{kind}-{hashlib.sha256(blob.encode()).hexdigest()[:24]}.json"


def cached(kind: str, key: dict, compute, use_cache: bool):
    if not use_cache:
        return compute()
    path = _cache_path(kind, key)
    if path.exists():
        try:
            return json.loads(path.read_text())
        except (OSError, ValueError):
            pass
    value = compute()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(value, sort_keys=True))
        os.replace(tmp, path)
    except OSError:
        pass
    return value


# -- commands -------------------------------------------------------------------

def cmd_spectrum(args) -> tuple[dict, str, str]:
    q, n, k = args.q, args.n, args.k
    method = args.method
    if method == "auto":
        method = "product"
    if method == "brute":
        print(f"brute force: {gaussian_binomial(n, k, q)} subspaces to visit", file=sys.stderr)
        counts = cached("brute", {"q": q, "n": n, "k": k},
                        lambda: [str(c) for c in brute_spectrum(n, k, q, threads=args.threads,
                                                                   guard=args.guard).counts],
                        not args.no_cache)
        used = "brute_force"
    else:
        s = spectrum(n, k, q, method)
        counts, used = s.as_strings(), s.method
    results = {"counts": counts, "total": str(sum(int(c) for c in counts)),
               "gaussian_binomial": str(gaussian_binomial(n, k, q))}
    prov = {"method": used}
    rows = [{"q": q, "n": n, "k": k, "l": l, "count": c, "method": used} for l, c in enumerate(counts)]
    cols = ("q", "n", "k", "l", "count", "method")
    return make_document("spectrum", vars_of(args), results, prov, 0.0), _table(rows, cols), _csv(rows, cols)


def _ratio_row(rep) -> dict:
    p = predicted_mu(rep.n, rep.k, rep.l, rep.q)
    return {"q": rep.q, "n": rep.n, "k": rep.k, "l": rep.l,
            "ratio": f"{rep.ratio.numerator}/{rep.ratio.denominator}",
            "alpha": f"{rep.alpha.numerator}/{rep.alpha.denominator}",
            "mu": str(rep.mu), "bound": str(rep.bound), "regime": rep.regime,
            "tight": str(rep.tight).lower(), "predicted_mu": f"{p.kind}:{p.value}" if p.value is not None else "none",
            "branch": rep.branch, "ratio_display": display_ratio(rep.ratio)}


RATIO_COLUMNS = ("q", "n", "k", "l", "ratio", "alpha", "mu", "bound", "regime", "tight",
                 "predicted_mu", "branch", "ratio_display")


def cmd_ratios(args) -> tuple[dict, str, str]:
    if args.verify_grid:
        qs = [args.q] if args.q else [2, 3, 4, 5, 7]
        reports, violations, excluded = verify_main_theorem(qs, args.max_n)
        rows = [_ratio_row(r) for r in violations]
        results = {"checked": str(len(reports)), "violations": rows,
                   "excluded_degenerate": [list(map(str, t)) for t in excluded],
                   "tight": [[str(r.q), str(r.n), str(r.k), str(r.l)] for r in reports if r.tight]}
        doc = make_document("ratios", vars_of(args), results, {"method": "sendrier counts vs alpha"}, 0.0)
        text = f"checked {len(reports)} tuples, {len(violations)} violations, {len(excluded)} degenerate excluded"
        if violations:
            text += "\n" + _table(rows, RATIO_COLUMNS)
            raise Mismatch(text)
        return doc, text, _csv(rows, RATIO_COLUMNS)
    if args.n is None or args.k is None:
        raise DomainError("ratios needs --n and --k (or --verify-grid)")
    rows, notes = [], []
    for l in range(args.k):
        try:
            rows.append(_ratio_row(ratio_report(args.n, args.k, l, args.q)))
        except DegenerateRatio as e:
            notes.append(str(e))
    results = {"rows": [{c: v for c, v in r.items() if c != "ratio_display"} for r in rows],
               "display_only": {str(r["l"]): r["ratio_display"] for r in rows},
               "notes": notes}
    text = _table(rows, RATIO_COLUMNS) + "".join(f"\nnote: {x}" for x in notes)
    return make_document("ratios", vars_of(args), results, {"method": "sendrier"}, 0.0), text, \
        _csv(rows, RATIO_COLUMNS)


def _classify_results(q, n, k, min_d, min_dd, mass, conj, limit):
    cl = classify(n, k, q, min_d, min_dd, limit)
    res = {"census": {t: str(v) for t, v in cl.census.totals().items()},
           "by_hull_dim": {t: [str(x) for x in cl.census.by_hull(t)] for t in cl.census.totals()},
           "classes": census_rows(cl.records)}
    if mass:
        every = all_classes(n, k, q, limit)
        checks = [mass_formula_check(every, n, k, l, q) for l in range(k + 1)]
        res["mass_check"] = [{"l": str(c.l), "labeled": str(c.labeled_total),
                              "formula": str(c.formula_total), "ok": c.ok} for c in checks]
    if conj:
        rep = conjecture_check(n, k, q, limit)
        res["conjecture"] = {"counts": [str(c) for c in rep.counts], "holds": rep.holds}
    return res


def cmd_classify(args) -> tuple[dict, str, str]:
    q, n, k = args.q, args.n, args.k
    conj = args.conjecture and n >= 2 * k
    key = {"q": q, "n": n, "k": k, "min_d": args.min_d, "min_dd": args.min_dd,
           "mass": args.mass_check, "conj": conj, "limit": args.limit}
    res = cached("classify", key,
                 lambda: _classify_results(q, n, k, args.min_d, args.min_dd, args.mass_check, conj, args.limit),
                 not args.no_cache)
    lines = [f"[{n},{k}]_{q} classes with d >= {args.min_d}, dual d >= {args.min_dd}"]
    lines += [f"  {t:7s} {v}" for t, v in res["census"].items()]
    lines += [f"  by hull dim ({t}): {' '.join(v)}" for t, v in res["by_hull_dim"].items()]
    if args.list:
        lines.append(_table(res["classes"], CENSUS_COLUMNS))
    failed = []
    for c in res.get("mass_check", []):
        lines.append(f"  mass formula l={c['l']}: {c['labeled']} vs {c['formula']} {'ok' if c['ok'] else 'MISMATCH'}")
        if not c["ok"]:
            failed.append(c)
    if "conjecture" in res:
        cj = res["conjecture"]
        lines.append(f"  chain min(B0,B1) > B2 > ... : {' '.join(cj['counts'])} -> {cj['holds']}")
    doc = make_document("classify", vars_of(args), res, {"method": "orbit closure, q in (2,3)"}, 0.0)
    if failed:
        raise Mismatch("\n".join(lines))
    return doc, "\n".join(lines), _csv(res["classes"], CENSUS_COLUMNS)


def crosscheck(q: int, max_n: int, with_brute: bool = False, brute_max_n: int | None = None,
               threads: int = 1):
    """Yield (label, ok, detail) for every comparison; stops at nothing."""
    for n in range(2, max_n + 1):
        for k in range(1, n):
            total = 0
            for l in range(k + 1):
                s, p = sendrier_count(n, k, l, q), product_count(n, k, l, q)
                total += s
                yield f"sendrier=product {(n, k, l, q)}", s == p, f"{s} vs {p}"
                d = sendrier_count(n, n - k, l, q) if l <= n - k else 0
                yield f"duality {(n, k, l, q)}", s == d, f"{s} vs {d}"
            g = gaussian_binomial(n, k, q)
            yield f"partition {(n, k, q)}", total == g, f"{total} vs {g}"
            if q % 2:
                a, b = lcd_count_closed(n, k, q), sendrier_count(n, k, 0, q)
                yield f"lcd_closed {(n, k, q)}", a == b, f"{a} vs {b}"
    _, violations, _ = verify_main_theorem([q], max_n)
    yield f"ratio theorem q={q} n<={max_n}", not violations, f"{len(violations)} violations"
    if with_brute:
        top = max_n if brute_max_n is None else brute_max_n
        for n in range(2, top + 1):
            for k in range(1, n // 2 + 1):
                b = brute_spectrum(n, k, q, threads=threads).counts
                f = spectrum(n, k, q, "sendrier").counts
                yield f"brute {(n, k, q)}", b == f, f"{b} vs {f}"


def cmd_crosscheck(args) -> tuple[dict, str, str]:
    n_ok = 0
    for label, ok, detail in crosscheck(args.q, args.max_n, args.with_brute, args.brute_max_n, args.threads):
        if not ok:
            raise Mismatch(f"first mismatch: {label}: {detail}")
        n_ok += 1
    results = {"comparisons": str(n_ok), "mismatches": "0"}
    doc = make_document("crosscheck", vars_of(args), results, {"method": "all routes"}, 0.0)
    return doc, f"{n_ok} comparisons, all equal", _csv([results], ("comparisons", "mismatches"))


def vars_of(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format")}


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hullcensus", description="Counts of linear codes by hull dimension.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("spectrum", help="A(n,k,l,q) for l = 0..k")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("auto", "sendrier", "product", "brute"), default="auto")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ratios", help="ratios A(l)/A(l+1), alpha and mu")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--verify-grid", action="store_true")
    p.add_argument("--max-n", type=int, default=14)
    common(p)
    p.set_defaults(func=cmd_ratios)

    p = sub.add_parser("classify", help="equivalence classes for q = 2, 3")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-d", type=int, default=1)
    p.add_argument("--min-dd", type=int, default=1)
    p.add_argument("--mass-check", action="store_true")
    p.add_argument("--conjecture", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="override the default length bound")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("crosscheck", help="formula vs formula (and brute force) comparisons")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--with-brute", action="store_true")
    p.add_argument("--brute-max-n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_crosscheck)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command != "ratios" or not args.verify_grid:
        if args.q is None:
            print("error: --q is required", file=sys.stderr)
            return EXIT_DOMAIN
    t0 = time.perf_counter()
    try:
        doc, text, csv_text = args.func(args)
    except Mismatch as e:
        print(str(e), file=sys.stderr)
        return EXIT_MISMATCH
    except (GuardExceeded, ClassificationBoundError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (DomainError, IntegralityError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    doc["timing"] = {"seconds": f"{time.perf_counter() - t0:.3f}"}
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

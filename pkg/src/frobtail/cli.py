"""Command-line front end: YAML jobs, table reproduction, text and JSON reports.

Exit status: 0 when every asserted check passes, 1 on a check failure,
2 on a configuration error, 3 on a computational error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import yaml

from . import fixtures
from .artinian import back_twist
from .errors import (BudgetExceeded, ConfigError, FDegreeNotThree, FrobtailError, ParseError,
                     SocleNotPure)
from .frobenius import bracket_power, compute_row
from .mf import alternating_normalize, extract_mf, verify_mf
from .poly import Polynomial, PolynomialRing
from .resolution import DEFAULT_MAX_POSITION, BettiTable, resolve_over_R
from .theorem import frobenius_shift_check, check_pure_socle, colon_tail_compare

log = logging.getLogger("frobtail")

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_COMPUTE = 0, 1, 2, 3
CHECKS = ("theorem", "cor21", "prop41", "prop45", "mf")
FORMATS = ("text", "json")


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


@dataclass
class JobConfig:
    p: int
    vars: List[str]
    f: str
    ideal: List[str]
    exponents: List[int] = field(default_factory=lambda: [0])
    max_position: int = DEFAULT_MAX_POSITION
    checks: List[str] = field(default_factory=lambda: ["theorem"])
    seed: int = 0
    format: str = "text"

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.p, self.vars)

    def polynomials(self):
        ring = self.ring()
        try:
            f = ring.parse(self.f)
        except ParseError as exc:
            raise ConfigError(str(exc), "f") from None
        ideal = []
        for i, text in enumerate(self.ideal):
            try:
                ideal.append(ring.parse(text))
            except ParseError as exc:
                raise ConfigError(str(exc), f"ideal[{i}]") from None
        if f.is_zero() or not f.is_homogeneous():
            raise ConfigError("must be a nonzero homogeneous polynomial", "f")
        for i, g in enumerate(ideal):
            if not g.is_homogeneous():
                raise ConfigError("generator is not homogeneous", f"ideal[{i}]")
        return f, ideal


def _require(data: dict, key: str, kind, path: str = ""):
    if key not in data:
        raise ConfigError("missing required field", path + key)
    val = data[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise ConfigError(f"expected an integer, got {val!r}", path + key)
    if kind is str and not isinstance(val, str):
        raise ConfigError(f"expected a string, got {val!r}", path + key)
    if kind is list and not isinstance(val, list):
        raise ConfigError(f"expected a list, got {val!r}", path + key)
    return val


def config_from_dict(data) -> JobConfig:
    from .field import is_prime

    if not isinstance(data, dict):
        raise ConfigError("configuration must be a mapping")
    known = {"p", "vars", "f", "ideal", "exponents", "max_position", "checks", "seed", "format"}
    for key in data:
        if key not in known:
            raise ConfigError("unknown field", str(key))
    p = _require(data, "p", int)
    if not is_prime(p) or p >= 2 ** 31:
        raise ConfigError(f"{p} is not a prime below 2^31", "p")
    names = _require(data, "vars", list)
    if len(names) != 3:
        raise ConfigError(f"exactly 3 variables required, got {len(names)}", "vars")
    for i, n in enumerate(names):
        if not isinstance(n, str) or not n.isidentifier():
            raise ConfigError(f"bad variable name {n!r}", f"vars[{i}]")
    if len(set(names)) != 3:
        raise ConfigError("variable names must be distinct", "vars")
    f = _require(data, "f", str)
    ideal = _require(data, "ideal", list)
    for i, g in enumerate(ideal):
        if not isinstance(g, str):
            raise ConfigError(f"expected a string, got {g!r}", f"ideal[{i}]")
    cfg = JobConfig(p, [str(n) for n in names], f, [str(g) for g in ideal])
    if "exponents" in data:
        ex = _require(data, "exponents", list)
        for i, e in enumerate(ex):
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ConfigError(f"expected a non-negative integer, got {e!r}", f"exponents[{i}]")
        cfg.exponents = sorted(set(ex))
    if "max_position" in data:
        mp = _require(data, "max_position", int)
        if mp < 2:
            raise ConfigError("must be at least 2", "max_position")
        cfg.max_position = mp
    if "checks" in data:
        ch = _require(data, "checks", list)
        for i, c in enumerate(ch):
            if c not in CHECKS:
                raise ConfigError(f"unknown check {c!r} (choose from {', '.join(CHECKS)})", f"checks[{i}]")
        cfg.checks = list(dict.fromkeys(ch))
    if "seed" in data:
        cfg.seed = _require(data, "seed", int)
    if "format" in data:
        fmt = _require(data, "format", str)
        if fmt not in FORMATS:
            raise ConfigError(f"expected one of {FORMATS}", "format")
        cfg.format = fmt
    cfg.polynomials()
    return cfg


def load_config(path: str) -> JobConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(str(exc), path) from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid YAML: {exc}", path) from None
    return config_from_dict(data)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class ReportBundle:
    config: dict
    rows: List[dict] = field(default_factory=list)
    timing: Optional[Dict[str, float]] = None

    def to_dict(self) -> dict:
        out = {"config": self.config, "rows": self.rows}
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ReportBundle":
        d = json.loads(text)
        return cls(d["config"], d["rows"], d.get("timing"))

    def check_results(self):
        for row in self.rows:
            for name, res in row.get("checks", {}).items():
                yield row["e"], name, res

    @property
    def computational_errors(self) -> List[str]:
        errs = [f"e={r['e']}: {r['error']}" for r in self.rows if r.get("error")]
        errs += [f"e={e} {name}: {res['error']}" for e, name, res in self.check_results()
                 if res.get("error")]
        return errs

    @property
    def failures(self) -> List[str]:
        return [f"e={e} {name}" for e, name, res in self.check_results()
                if res.get("asserted") and not res.get("passed")]

    def exit_code(self) -> int:
        if self.computational_errors:
            return EXIT_COMPUTE
        if self.failures:
            return EXIT_CHECK
        return EXIT_OK


def render_betti(table: BettiTable, positions: Optional[Sequence[int]] = None) -> str:
    """Two lines: ``pos k`` headers and ``twist:mult`` cells, column aligned."""
    if table.is_empty():
        return ""
    ks = list(positions) if positions is not None else list(range(table.length + 1))
    heads = [f"pos {k}" for k in ks]
    cells = [table.format_position(k) for k in ks]
    widths = [max(len(h), len(c)) for h, c in zip(heads, cells)]
    return "\n".join("  ".join(x.rjust(w) for x, w in zip(line, widths)).rstrip()
                     for line in (heads, cells))


def _mf_summary(res, f, J, seed: int) -> dict:
    if res.length < 4:
        # the factorization is read off positions 2..4
        res = resolve_over_R(f, J, max_position=4)
    mf = extract_mf(res, f)
    check = verify_mf(mf)
    pair = alternating_normalize(mf, seed=seed)
    return {
        "size": mf.size,
        "products_ok": bool(check),
        "witness": list(check.witness) if check.witness else None,
        "D3_degrees": sorted(mf.D3.entry_degrees()),
        "D4_degrees": sorted(mf.D4.entry_degrees()),
        "Phi_alternating": pair.Phi.is_alternating(),
        "Psi_alternating": pair.Psi.is_alternating(),
        "Phi": [[str(e) for e in r] for r in pair.Phi.entries],
    }


def _run_check(fn, asserted: bool = True) -> dict:
    try:
        body = fn()
    except (FDegreeNotThree, SocleNotPure) as exc:
        return {"asserted": False, "passed": True, "skipped": f"{type(exc).__name__}: {exc}"}
    except FrobtailError as exc:
        return {"asserted": asserted, "passed": False, "error": f"{type(exc).__name__}: {exc}"}
    body.setdefault("asserted", asserted)
    return body


_SKIPPED = {"asserted": False, "passed": True, "skipped": "hypotheses fail"}


def run(config: JobConfig, timing: bool = False) -> ReportBundle:
    """Execute all requested checks for every exponent in the config."""
    f, I = config.polynomials()
    p = config.p
    bundle = ReportBundle(asdict(config), timing={} if timing else None)
    computed = {}
    for e in config.exponents:
        t0 = time.perf_counter()
        row = compute_row(f, I, e, config.max_position, theorem=True)
        computed[e] = row
        entry = {"e": e, "q": row.q, "error": row.error, "checks": {}}
        if row.error is None:
            entry["socle"] = row.socle.format()
            entry["betti"] = row.resolution.betti.to_dict()
            rep = row.report
            holds = rep.verdict.all_hold
            entry["hypotheses"] = rep.verdict.to_dict()
            if "theorem" in config.checks:
                entry["checks"]["theorem"] = {"asserted": holds, "passed": rep.passed,
                                              "match": rep.match,
                                              "mismatches": {str(k): v for k, v in rep.mismatches.items()}}
            Iq = bracket_power(I, row.q)
            gated = [c for c in ("prop41", "prop45", "mf") if c in config.checks]

            def pure_socle():
                out = check_pure_socle(f, Iq, socle=row.socle, resolution=row.resolution)
                out["passed"] = out["matches"]
                return out

            def colon_tail():
                out = colon_tail_compare(f, Iq).to_dict()
                out["passed"] = out["matches"]
                return out

            def mf():
                out = _mf_summary(row.resolution, f, Iq, config.seed)
                out["passed"] = out["products_ok"] and out["Phi_alternating"] and out["Psi_alternating"]
                return out

            fns = {"prop41": pure_socle, "prop45": colon_tail, "mf": mf}
            for name in gated:
                entry["checks"][name] = _run_check(fns[name]) if holds else dict(_SKIPPED)
        bundle.rows.append(entry)
        if timing:
            bundle.timing[str(e)] = round(time.perf_counter() - t0, 6)
    if "cor21" in config.checks:
        es = config.exponents
        rows = {r["e"]: r for r in bundle.rows}
        for e0, e1 in zip(es, es[1:]):
            base, power = computed[e0], computed[e1]
            if base.error or power.error:
                continue

            def shift(e0=e0, e1=e1, base=base, power=power):
                Ie = bracket_power(I, p ** e0)
                rep = frobenius_shift_check(
                    f, Ie, p ** (e1 - e0), config.max_position,
                    base={"resolution": base.resolution, "socle": base.socle},
                    power={"resolution": power.resolution, "socle": power.socle}).to_dict()
                rep["against_e"] = e1
                rep["passed"] = rep["status"] in ("PASS", "NOT_APPLICABLE", "UNSATISFIABLE")
                rep["asserted"] = rep["status"] in ("PASS", "FAIL")
                return rep
            rows[e0]["checks"]["cor21"] = _run_check(shift)
    return bundle


def format_bundle(bundle: ReportBundle) -> str:
    cfg = bundle.config
    lines = [f"p={cfg['p']} f={cfg['f']} ideal=({', '.join(cfg['ideal'])})"]
    for row in bundle.rows:
        lines.append("")
        lines.append(f"e={row['e']} q={row['q']}")
        if row.get("error"):
            lines.append(f"  error: {row['error']}")
            continue
        lines.append(f"  socle: {row['socle'] or '-'}")
        table = BettiTable.from_dict(row["betti"])
        lines.extend("  " + ln for ln in render_betti(table).splitlines())
        h = row["hypotheses"]
        flags = "".join(k for k in "abc" if h[f"{k}_holds"])
        lines.append(f"  hypotheses holding: {flags or 'none'}")
        for name, res in row["checks"].items():
            if res.get("error"):
                status = "ERROR " + res["error"]
            elif not res.get("asserted"):
                status = "n/a" + (f" ({res['status']})" if "status" in res else "")
            else:
                status = "PASS" if res.get("passed") else "FAIL"
            lines.append(f"  {name}: {status}")
    if bundle.timing:
        lines.append("")
        lines.append("timing: " + " ".join(f"e={k}:{v:.3f}s" for k, v in bundle.timing.items()))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Table reproduction
# ---------------------------------------------------------------------------


@dataclass
class ReproduceResult:
    selector: str
    e_max: int
    rows: Dict[int, Dict[str, str]]
    expected: Dict[int, Dict[str, str]]
    diffs: List[str]
    last_completed: Optional[int]

    @property
    def passed(self) -> bool:
        return not self.diffs

    def format(self) -> str:
        table = fixtures.TABLES[self.selector]
        cols = ["e"] + table["columns"] + (["hyp"] if table["hypotheses_hold"] is not None else [])
        body = [[str(e)] + [self.rows[e].get(c, "") for c in cols[1:]] for e in sorted(self.rows)]
        widths = [max(len(r[j]) for r in [cols] + body) for j in range(len(cols))]
        out = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in [cols] + body]
        out.append("PASS" if self.passed else "FAIL")
        out.extend("  " + d for d in self.diffs)
        return "\n".join(out)


def reproduce_table(selector: str, e_max: int, allow_large_e: bool = False) -> ReproduceResult:
    """Recompute rows ``0..e_max`` of a reference table and diff them cell by cell.

    Past the per-table budget (without ``allow_large_e``) the rows inside the
    budget are still computed, then :class:`BudgetExceeded` is raised with the
    partial result attached as ``exc.result``.
    """
    if selector not in fixtures.TABLES:
        raise ConfigError(f"unknown table {selector!r}", "--reproduce")
    table = fixtures.TABLES[selector]
    available = fixtures.exponents(table)
    if e_max < 0 or e_max > max(available):
        raise ConfigError(f"e_max must lie in 0..{max(available)}", "--e-max")
    budget = fixtures.BUDGETS[selector]
    stop = e_max if allow_large_e else min(e_max, budget)
    ring = PolynomialRing(table["p"], table["vars"])
    f = ring.parse(table["f"])
    I = [ring.parse(g) for g in table["ideal"]]
    positions = [int(c.split()[1]) for c in table["columns"] if c.startswith("pos")]
    rows, expected, diffs = {}, {}, []
    last = None
    for e in range(stop + 1):
        row = compute_row(f, I, e, max(positions), theorem=table["hypotheses_hold"] is not None)
        if row.error:
            diffs.append(f"e={e}: {row.error}")
            break
        got = {f"pos {k}": row.resolution.betti.format_position(k) for k in positions}
        if "socle" in table["columns"]:
            got["socle"] = row.socle.format()
        want = fixtures.row(table, e)
        if table["hypotheses_hold"] is not None:
            got["hyp"] = "yes" if row.report.verdict.all_hold else "no"
            want["hyp"] = "yes" if e in table["hypotheses_hold"] else "no"
        rows[e], expected[e] = got, want
        for col, cell in want.items():
            if col != "hyp" and fixtures.parse_cell(got.get(col, "")) != fixtures.parse_cell(cell):
                diffs.append(f"e={e} {col}: expected {cell!r} got {got.get(col)!r}")
            elif col == "hyp" and got[col] != cell:
                diffs.append(f"e={e} hypotheses: expected {cell} got {got[col]}")
        last = e
    result = ReproduceResult(selector, e_max, rows, expected, diffs, last)
    if stop < e_max:
        exc = BudgetExceeded(f"e_max={e_max} exceeds the budget e<={budget} for {selector}; "
                             "pass --allow-large-e to go further", last_completed=last)
        exc.result = result
        raise exc
    return result


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frobtail", description=(
        "Resolutions over hypersurfaces, socle degrees of Frobenius powers and "
        "matrix factorizations."))
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", metavar="PATH", help="YAML job description")
    src.add_argument("--reproduce", metavar="SELECTOR", choices=sorted(fixtures.TABLES),
                     help="recompute a reference table: " + ", ".join(sorted(fixtures.TABLES)))
    ap.add_argument("--e-max", type=int, metavar="N", help="largest exponent (reproduce) or cap on config exponents")
    ap.add_argument("--max-position", type=int, metavar="N", help="homological positions to compute")
    ap.add_argument("--seed", type=int, metavar="N", help="seed for the alternating normalization")
    ap.add_argument("--json", metavar="PATH", help="write the report bundle as JSON")
    ap.add_argument("--allow-large-e", action="store_true", help="lift the exponent budget")
    ap.add_argument("--timing", action="store_true", help="record wall-clock time per exponent")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def _apply_overrides(cfg: JobConfig, args) -> JobConfig:
    if args.max_position is not None:
        if args.max_position < 2:
            raise ConfigError("must be at least 2", "--max-position")
        cfg.max_position = args.max_position
    if args.seed is not None:
        cfg.seed = args.seed
    if args.e_max is not None:
        cfg.exponents = [e for e in cfg.exponents if e <= args.e_max]
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    out = sys.stdout
    if args.reproduce:
        e_max = args.e_max if args.e_max is not None else fixtures.BUDGETS[args.reproduce]
        try:
            result = reproduce_table(args.reproduce, e_max, args.allow_large_e)
        except ConfigError as exc:
            print(f"configuration error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except BudgetExceeded as exc:
            print(exc.result.format(), file=out)
            print(f"budget exceeded: {exc} (last completed e={exc.last_completed})", file=sys.stderr)
            return EXIT_COMPUTE
        print(result.format(), file=out)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                json.dump({"selector": result.selector, "e_max": result.e_max,
                           "rows": {str(k): v for k, v in result.rows.items()},
                           "diffs": result.diffs, "passed": result.passed}, fh, sort_keys=True, indent=2)
        return EXIT_OK if result.passed else EXIT_CHECK
    try:
        cfg = _apply_overrides(load_config(args.config), args)
        budget = max(fixtures.BUDGETS.values())
        if not args.allow_large_e and any(e > budget for e in cfg.exponents):
            raise ConfigError(f"exponents above {budget} need --allow-large-e", "exponents")
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        bundle = run(cfg, timing=args.timing)
    except FrobtailError as exc:
        print(f"computational error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if cfg.format == "json" and not args.json:
        print(bundle.to_json(), file=out)
    else:
        print(format_bundle(bundle), file=out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(bundle.to_json() + "\n")
    for msg in bundle.computational_errors:
        print(f"error: {msg}", file=sys.stderr)
    for msg in bundle.failures:
        print(f"check failed: {msg}", file=sys.stderr)
    return bundle.exit_code()


def main_exit() -> None:
    sys.exit(main())

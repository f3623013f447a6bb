"""Command line: ``eqhom verify scenario.json`` and ``eqhom list-checks``.

Exit codes: 0 when every check passes, 1 when some check fails or errors,
2 when the scenario itself cannot be read.
"""

from __future__ import annotations

import argparse
import json
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .checks import REGISTRY, Context, catalog
from .homology import FGAbelianGroup
from .scenario import MAX_DEGREE_CAP, Resolver, Scenario, ScenarioError, check_entry

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    max_degree: int = 4
    jobs: int = 1
    timing: bool = False


def _match_values(expect: list, details: dict):
    if "values" not in details:
        return False, "this check reports no homology values to compare"
    want = [FGAbelianGroup.from_json(v) for v in expect]
    got = [FGAbelianGroup.from_json(v) for v in details["values"]]
    if len(want) > len(got):
        return False, f"expected {len(want)} degrees but only {len(got)} were computed"
    for n, (w, g) in enumerate(zip(want, got)):
        if w != g:
            return False, f"degree {n}: expected {w}, got {g}"
    return True, None


def evaluate(cid: str, args: dict, expect, ctx: Context) -> dict:
    """Run one check and turn its verdict into a status."""
    spec = REGISTRY.get(cid)
    if spec is None:
        return {"id": cid, "status": "error", "details": {"error": f"unknown check id {cid!r}"}}
    try:
        ok, details = spec.run(args, ctx)
    except (LookupError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        return {"id": cid, "status": "error", "details": {"error": f"unresolved input: {msg}"}}
    except Exception as exc:  # any library error becomes a reported error, never a crash
        return {"id": cid, "status": "error", "details": {"error": f"{type(exc).__name__}: {exc}"}}
    details = dict(details)
    details["anchor"] = spec.anchor
    if expect is None:
        status = "pass" if ok else "fail"
    elif expect in ("pass", "fail"):
        details["expected"] = expect
        status = "pass" if ("pass" if ok else "fail") == expect else "fail"
    elif isinstance(expect, list):
        details["expected"] = [FGAbelianGroup.from_json(v).to_json() for v in expect]
        match, why = _match_values(expect, details)
        if why:
            details["mismatch"] = why
        status = "pass" if match else "fail"
    else:
        return {"id": cid, "status": "error", "details": {"error": f"cannot read expectation {expect!r}"}}
    return {"id": cid, "status": status, "details": details}


def _run_one(objects: dict, entry: dict, config: RunConfig, resolver: Resolver | None = None) -> dict:
    cid, args, expect = check_entry(entry)
    ctx = Context(resolver or Resolver(objects), config.seed, config.max_degree)
    start = time.perf_counter()
    row = evaluate(cid, args, expect, ctx)
    row["ms"] = round((time.perf_counter() - start) * 1000, 1) if config.timing else None
    return row


def run_scenario(scenario: Scenario, config: RunConfig) -> dict:
    for entry in scenario.checks:
        check_entry(entry)  # schema errors surface before any work starts
    if config.jobs > 1 and len(scenario.checks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(_run_one, scenario.objects, e, config) for e in scenario.checks]
            rows = [f.result() for f in futures]
    else:
        resolver = Resolver(scenario.objects)
        rows = [_run_one(scenario.objects, e, config, resolver) for e in scenario.checks]
    summary = {"pass": 0, "fail": 0, "error": 0}
    for r in rows:
        summary[r["status"]] += 1
    return {
        "summary": summary,
        "checks": rows,
        "environment": {
            "package": f"eqhom {__version__}",
            "python": platform.python_version(),
            "seed": config.seed,
            "max_degree": config.max_degree,
        },
    }


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def exit_code(report: dict) -> int:
    s = report["summary"]
    return EXIT_OK if s["fail"] == 0 and s["error"] == 0 else EXIT_FAIL


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqhom", description="Run verification scenarios for equivariant Hochschild homology.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the checks of a scenario file")
    v.add_argument("scenario", help="scenario JSON file")
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--max-degree", type=int, help=f"homological degree bound (at most {MAX_DEGREE_CAP})")
    v.add_argument("--seed", type=int, help="seed for randomized checks")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--timing", action="store_true", help="record wall time per check (breaks byte identity)")
    ls = sub.add_parser("list-checks", help="print the check catalog")
    ls.add_argument("--json", action="store_true", help="print the catalog as JSON")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "list-checks":
        rows = catalog()
        if args.json:
            sys.stdout.write(json.dumps([{"id": i, "anchor": a, "args": g} for i, a, g in rows],
                                        indent=2, ensure_ascii=False) + "\n")
        else:
            width = max(len(i) for i, _, _ in rows)
            for i, a, g in rows:
                sys.stdout.write(f"{i:<{width}}  {a}\n{'':<{width}}  args: {', '.join(g) or '-'}\n")
        return EXIT_OK
    try:
        scenario = Scenario.load(args.scenario)
        N = scenario.max_degree if args.max_degree is None else args.max_degree
        if not 0 <= N <= MAX_DEGREE_CAP:
            raise ScenarioError(f"--max-degree must lie in 0..{MAX_DEGREE_CAP}")
        if args.jobs < 1:
            raise ScenarioError("--jobs must be positive")
        config = RunConfig(scenario.seed if args.seed is None else args.seed, N, args.jobs, args.timing)
        report = run_scenario(scenario, config)
    except ScenarioError as exc:
        sys.stderr.write(f"eqhom: {exc}\n")
        return EXIT_INPUT
    text = render(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code(report)


if __name__ == "__main__":
    raise SystemExit(main())

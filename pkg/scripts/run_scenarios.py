#!/usr/bin/env python3
"""Run every scenario in scenarios/ and print one summary line per file.

Reports go to reports/<name>.json.  Scenarios whose name says they expect a
failure are counted as expected.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from eqhom.cli import main

ROOT = Path(__file__).resolve().parents[1]

# exit code each bundled scenario is meant to produce
EXPECTED = {"bar_probe_expect_zero": 1, "malformed": 2}


def run(path: Path, out_dir: Path, jobs: int) -> tuple:
    out = out_dir / f"{path.stem}.json"
    start = time.perf_counter()
    code = main(["verify", str(path), "--report", str(out), "--jobs", str(jobs)])
    elapsed = time.perf_counter() - start
    summary = json.loads(out.read_text(encoding="utf-8"))["summary"] if code != 2 else None
    return code, summary, elapsed


def cli() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", default=str(ROOT / "scenarios"))
    ap.add_argument("--out", default=str(ROOT / "reports"))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    unexpected = 0
    for path in sorted(Path(args.dir).glob("*.json")):
        code, summary, elapsed = run(path, out_dir, args.jobs)
        want = EXPECTED.get(path.stem, 0)
        mark = "ok" if code == want else "UNEXPECTED"
        unexpected += code != want
        counts = " ".join(f"{k}={v}" for k, v in summary.items()) if summary else "no report"
        print(f"{path.stem:<28} exit {code} (want {want}) {mark:<10} {counts}  {elapsed:.2f}s")
    return 1 if unexpected else 0


if __name__ == "__main__":
    sys.exit(cli())

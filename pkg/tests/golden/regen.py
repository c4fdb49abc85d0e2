#!/usr/bin/env python3
"""Regenerate the golden corpus outputs.

Runs the installed CLI on every case under ``cases/`` and rewrites each
``expected.out``.  These files pin the exact bytes the CLI must keep
producing, so inspect the diff before committing a regeneration.
"""

import json
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent


def regen(case_dir):
    spec = json.loads((case_dir / "invocation.json").read_text())
    cmd = [sys.executable, "-m", "logmonoid", spec["command"]]
    cmd += spec.get("options", [])
    cmd += [str(case_dir / name) for name in spec["inputs"]]
    proc = subprocess.run(cmd, capture_output=True)
    if proc.returncode != 0:
        raise SystemExit(
            f"{case_dir.name}: exit {proc.returncode}\n{proc.stderr.decode()}")
    (case_dir / "expected.out").write_bytes(proc.stdout)
    return proc.stderr.decode()


def main():
    for case_dir in sorted((HERE / "cases").iterdir()):
        if not case_dir.is_dir():
            continue
        err = regen(case_dir)
        note = f"  [stderr: {err.strip()}]" if err else ""
        print(f"regenerated {case_dir.name}{note}")


if __name__ == "__main__":
    main()

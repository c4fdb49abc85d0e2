"""The command line in action: documents in, canonical JSON out.

Run with:  python3 demos/06_cli_tour.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(args, doc):
    with tempfile.TemporaryDirectory() as td:
        path = Path(td) / "input.json"
        path.write_text(json.dumps(doc))
        cmd = [sys.executable, "-m", "logmonoid", *args, str(path)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
    shown = " ".join(["logmonoid", *args, "input.json"])
    print(f"$ {shown}   (exit {proc.returncode})")
    for stream, text in (("stderr", proc.stderr), ("stdout", proc.stdout)):
        for line in text.rstrip("\n").splitlines():
            prefix = "! " if stream == "stderr" else "  "
            print(prefix + line)
    print()


def main():
    cone = {"kind": "cone", "dim": 2, "rays": [[2, -1], [0, 1]]}
    run(["hilbert"], cone)

    fan = {"kind": "fan", "dim": 2, "maximal_cones": [[[1, 0], [1, 2]]]}
    run(["resolve"], fan)

    n1 = {"kind": "affine-monoid", "free_rank": 1, "torsion": [],
          "generators": [[1]]}
    doubling = {"kind": "hom", "source": n1, "target": n1, "matrix": [[2]]}
    run(["hom-check", "--char", "2"], doubling)

    push = {"kind": "pushout-request", "left": doubling, "right": doubling}
    run(["pushout", "--mode", "fs", "--verify"], push)

    # warnings go to stderr (prefixed ! below); stdout stays canonical
    scaled = {"kind": "cone", "dim": 2, "rays": [[4, 0], [0, 2]]}
    run(["dual"], scaled)

    # domain errors exit 2 and print nothing on stdout
    line = {"kind": "cone", "dim": 2, "rays": [[1, 0], [-1, 0]]}
    run(["hilbert"], line)


if __name__ == "__main__":
    main()

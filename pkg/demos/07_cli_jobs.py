"""
Driving the command-line front end
==================================

Jobs are small JSON files; the command comes from the command line and may
be echoed in the file.  Reports embed the SHA-256 of the job bytes and are
byte-identical across runs, which makes them safe to pin in golden tests.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

job = {
    "command": "fgcheck",
    "variables": ["x", "y"],
    "map": ["x^2 + y^2"],
    "window": [5, 10],
}

with tempfile.TemporaryDirectory() as scratch:
    path = Path(scratch) / "job.json"
    path.write_text(json.dumps(job, indent=2))

    # Text report: aligned tables for reading.
    first = subprocess.run(
        [sys.executable, "-m", "cising.cli", "fgcheck", str(path)],
        capture_output=True, text=True)
    print(first.stdout)

    # JSON report: stable key order for machines.
    second = subprocess.run(
        [sys.executable, "-m", "cising.cli", "fgcheck", str(path),
         "--format", "json"],
        capture_output=True, text=True)
    verdict = json.loads(second.stdout)["result"]["verdict"]
    print("verdict from JSON report:", verdict)

    # Determinism: run it again, compare bytes.
    again = subprocess.run(
        [sys.executable, "-m", "cising.cli", "fgcheck", str(path)],
        capture_output=True, text=True)
    print("byte-identical reruns:", first.stdout == again.stdout)

    # Validation never computes anything; findings are the output.
    bad = Path(scratch) / "bad.json"
    bad.write_text(json.dumps({
        "command": "fgcheck",
        "variables": ["x"],
        "map": ["x^2 + z^2"],
        "window": [9, 5],
    }))
    findings = subprocess.run(
        [sys.executable, "-m", "cising.cli", "validate", str(bad)],
        capture_output=True, text=True)
    print(findings.stdout)

"""Driving the command-line interface.

Shows the flag surface, the three output formats, the batch mode, and the
exit-code contract (0 ok, 1 usage, 2 domain error, 3 verification failure).
"""

import subprocess
import sys
import tempfile
from pathlib import Path

CLI = [sys.executable, "-m", "leinartas.cli"]

EXPR = "(X^2*Y + X*Y^2 + X*Y + X + Y)/(X*Y*(X*Y+1))"


def call(*args):
    argv = [sys.executable, "-c", "from leinartas.cli import main; main()", *args]
    proc = subprocess.run(argv, capture_output=True, text=True)
    print("$ leinartas", " ".join(args))
    if proc.stdout:
        print(proc.stdout.rstrip())
    if proc.stderr:
        print("stderr:", proc.stderr.rstrip())
    print(f"(exit {proc.returncode})")
    print()


# Plain text with a verification report.
call("decompose", EXPR, "--vars", "X,Y", "--verify")

# JSON with the certificate log included.
call("decompose", EXPR, "--vars", "X,Y", "--format", "json", "--certificates")

# LaTeX, without numerator reduction.
call("decompose", EXPR, "--vars", "X,Y", "--format", "latex", "--no-normalize")

# Supplying the denominator factorization; a wrong product exits 2.
call("decompose", EXPR, "--vars", "X,Y", "--factor", "X*Y:1")

# Batch mode: one expression per line, '#' comments allowed.
with tempfile.TemporaryDirectory() as tmp:
    batch = Path(tmp) / "inputs.txt"
    batch.write_text(
        "# a small batch\n"
        "1/(X*Y)\n"
        f"{EXPR}\n"
    )
    call("decompose", "--input", str(batch), "--vars", "X,Y", "--verify")

# A parse error exits 1.
call("decompose", "X + * Y", "--vars", "X,Y")

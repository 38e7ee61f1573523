"""Rewrite tests/golden from the current CLI output.

Review the diff before committing: goldens exist to catch unintended changes.
"""
import contextlib
import io
from pathlib import Path

from dichordal.cli import main
from dichordal.fixtures import PATTERNS
from dichordal.io import write_text

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"
NAMES = {"Fig1A": "F_A", "Fig1B": "F_B", "Fig1C": "F_C", "Fig1D": "F_D"}
COMMANDS = [("chordal", []), ("characterize", ["--class", "semicomplete"]), ("classify", [])]


def capture(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(argv)
    return buf.getvalue()


def run():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for kind, d in PATTERNS.items():
        name = NAMES[kind]
        src = GOLDEN / f"{name}.txt"
        src.write_text(write_text(d, comment=name))
        for cmd, extra in COMMANDS:
            for fmt, ext in (("text", "out"), ("json", "json")):
                (GOLDEN / f"{name}.{cmd}.{ext}").write_text(capture([cmd, "-i", str(src), "-f", fmt, *extra]))
    print(f"regenerated goldens in {GOLDEN}")


if __name__ == "__main__":
    run()

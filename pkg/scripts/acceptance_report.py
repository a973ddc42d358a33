"""Run the acceptance tests and print only their PASS/FAIL lines."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-s", "-p", "no:cacheprovider",
                           str(ROOT / "tests" / "test_acceptance.py")],
                          capture_output=True, text=True, cwd=ROOT)
    lines = [x for x in proc.stdout.splitlines() if x.startswith(("[PASS]", "[FAIL]"))]
    print("\n".join(lines))
    print(proc.stdout.strip().splitlines()[-1])
    return 0 if all(x.startswith("[PASS]") for x in lines) else 1


if __name__ == "__main__":
    sys.exit(main())

import sys
from pathlib import Path

# Share the primary suite's helpers (acceptance-line recording) when the
# two suites run together from the repository root.
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "tests"))

"""Tests for eigen_sequences; importing the package makes src importable when run from the root."""

import sys
from pathlib import Path

SRC_ROOT = Path(__file__).resolve().parents[1] / "src"

if str(SRC_ROOT) not in sys.path:
    sys.path.append(str(SRC_ROOT))

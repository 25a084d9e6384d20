"""Location of the bundled data files; ``PTD_DATA_DIR`` overrides it."""

from __future__ import annotations

import os
from pathlib import Path

BUNDLED = Path(__file__).resolve().parent / "data"


def data_dir() -> Path:
    env = os.environ.get("PTD_DATA_DIR")
    return Path(env) if env else BUNDLED


def data_path(name: str) -> Path:
    return data_dir() / name

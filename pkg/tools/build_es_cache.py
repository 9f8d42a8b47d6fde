"""Regenerate the cached Elser-Sloane facet file shipped in ``qcjordan/data``."""

from __future__ import annotations

import json
import time
from pathlib import Path

from qcjordan.model_set import build_elser_sloane_window, elser_sloane_cache_json

OUT = Path(__file__).resolve().parents[1] / "src" / "qcjordan" / "data" / "elser_sloane_facets.json"


def main() -> None:
    t0 = time.perf_counter()
    win = build_elser_sloane_window()
    OUT.write_text(json.dumps(elser_sloane_cache_json(win), indent=None, separators=(",", ":")) + "\n")
    print(f"{len(win.facets)} facets written to {OUT} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

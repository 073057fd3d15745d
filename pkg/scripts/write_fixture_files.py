#!/usr/bin/env python3
"""Dump the built-in fixtures as CLI-ready JSON complex files.

Usage: python scripts/write_fixture_files.py OUTDIR
"""

import sys
from pathlib import Path

from capstar.fixtures import pair_models, surfaces
from capstar.io import serialize_complex


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixture-files")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, x in surfaces().items():
        (outdir / f"{name}.json").write_text(serialize_complex(x) + "\n")
    for name, model in pair_models().items():
        (outdir / f"{name}.json").write_text(serialize_complex(model.ambient) + "\n")
        boundary = model.boundary.as_complex(f"{name}-boundary")
        (outdir / f"{name}-boundary.json").write_text(serialize_complex(boundary) + "\n")
    print(f"wrote fixture files to {outdir}/")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Write the multiplication and bracket tables as JSON files.

Usage: dump_tables.py [outdir]
"""

import json
import pathlib
import sys

from g2models import octonions as oc
from g2models import splitmodel as sm


def main() -> None:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tables")
    outdir.mkdir(parents=True, exist_ok=True)
    payloads = {
        "fano.json": oc.basis_table("division").to_json(),
        "split_octonion.json": oc.basis_table("split").to_json(),
        "g2_structure_constants.json": sm.structure_table().to_json(),
    }
    for name, payload in payloads.items():
        path = outdir / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Write catalog/<name>.json golden files from the frozen oracle output.

Usage: make_catalog.py tests/golden/roots.json catalog/
"""
import json
import sys

ROWS = {
    "G2-split-open": ("G2", "G2-open"),
    "G2-split-codim1-long": ("G2", "G2-codim1-long"),
    "G2-split-codim1-short": ("G2", "G2-codim1-short"),
    "G2-split-closed": ("G2", "G2-closed"),
    "F4-FI-row1": ("F4", "F4-alpha1"),
    "F4-FI-row2": ("F4", "F4-alpha2"),
    "F4-FI-row3": ("F4", "F4-alpha3"),
    "F4-FI-row4": ("F4", "F4-alpha4"),
}


def main():
    oracle = json.load(open(sys.argv[1]))
    outdir = sys.argv[2]
    for name, (group, key) in ROWS.items():
        row = oracle[key]
        doc = {
            "name": name,
            "group": group,
            "kind": "mumford-tate",
            "oracle_key": key,
            "figure_shift": [0, 0],
            "expected": {"V": row["V"], "g": row["g"], "n_order": row["n_order"]},
        }
        with open("%s/%s.json" % (outdir, name), "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()

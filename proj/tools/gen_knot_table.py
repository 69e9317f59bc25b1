#!/usr/bin/env python3
"""Regenerate data/knot_table.tsv and tests/data/knotinfo_jones.tsv from KnotInfo.

Rational knots get their Conway symbol; everything else gets a braid word.
Requires the `database_knotinfo` package.
"""
import argparse
import pathlib

from database_knotinfo import link_list

AMPHI = {"fully amphicheiral", "negative amphicheiral", "positive amphicheiral"}


def conway_symbol(entry):
    if not entry["two_bridge_notation"]:
        return None
    digits = entry["conway_notation"].strip("[]")
    return " ".join(digits)


def braid_symbol(entry):
    return "braid" + entry["braid_notation"].replace(" ", "")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--root", default=str(pathlib.Path(__file__).resolve().parent.parent))
    args = ap.parse_args()
    root = pathlib.Path(args.root)

    table = ["# name\tsymbol\tcrossing_number\tamphicheiral"]
    jones = ["# name\tjones (KnotInfo convention, variable t)"]
    for entry in link_list()[2:]:
        try:
            n = int(entry["crossing_number"])
        except ValueError:
            continue
        if n > args.max_n:
            break
        symbol = conway_symbol(entry) or braid_symbol(entry)
        amphi = 1 if entry["symmetry_type"] in AMPHI else 0
        table.append(f"{entry['name']}\t{symbol}\t{n}\t{amphi}")
        jones.append(f"{entry['name']}\t{entry['jones_polynomial'].replace(' ', '')}")

    (root / "data" / "knot_table.tsv").write_text("\n".join(table) + "\n")
    (root / "tests" / "data" / "knotinfo_jones.tsv").write_text("\n".join(jones) + "\n")


if __name__ == "__main__":
    main()

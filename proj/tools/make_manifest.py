#!/usr/bin/env python3
"""Rewrites data/small/MANIFEST: one "file fnv1a64" line per stored table."""
import pathlib
import re
import sys

root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data") / "small"


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def key(p):
    n, i = map(int, re.match(r"order(\d+)_(\d+)\.tbl", p.name).groups())
    return n, i


files = sorted(root.glob("order*_*.tbl"), key=key)
with open(root / "MANIFEST", "w") as out:
    for f in files:
        out.write(f"{f.name} {fnv1a64(f.read_bytes()):016x}\n")

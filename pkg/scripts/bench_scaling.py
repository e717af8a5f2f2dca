#!/usr/bin/env python3
"""Time the pipeline over an annulus refinement family and fit the growth.

Usage: python scripts/bench_scaling.py [levels] [repeats]
"""

import math
import sys

from globalloops import build_complex
from globalloops.bench import format_table, run_refinement_bench


def annulus(n=8):
    faces = []
    for i in range(n):
        a, b = i, (i + 1) % n
        A, B = n + i, n + (i + 1) % n
        faces.append((a, b, B))
        faces.append((a, B, A))
    coords = []
    for r in (1.0, 2.0):
        for i in range(n):
            angle = 2 * math.pi * i / n
            coords.append((r * math.cos(angle), r * math.sin(angle), 0.0))
    return build_complex(2 * n, faces, coords=coords)


def main() -> int:
    levels = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    rows = run_refinement_bench(annulus(), levels=levels, repeats=repeats)
    print(format_table(rows, fit_from=min(2, levels)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

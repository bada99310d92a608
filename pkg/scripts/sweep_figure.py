#!/usr/bin/env python3
"""J(alpha) curves for a few chain lengths, as CSV and an SVG figure."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from chainfair import sweep_J
from chainfair.svg import line_chart

OUT = os.path.join(os.path.dirname(__file__), "..", "out")

if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    grid = [0.01 + 0.01 * k for k in range(98)]
    for n in (3, 10, 50):
        rows = sweep_J(n, grid)
        csv_path = os.path.join(OUT, f"sweep_n{n}.csv")
        with open(csv_path, "w") as f:
            f.write("alpha,J\n")
            for a, j in rows:
                f.write(f"{a!r},{j!r}\n")
        svg_path = os.path.join(OUT, f"sweep_n{n}.svg")
        with open(svg_path, "w") as f:
            f.write(line_chart(rows, title=f"J(alpha), n={n}", xlabel="alpha", ylabel="J"))
        print(csv_path)
        print(svg_path)

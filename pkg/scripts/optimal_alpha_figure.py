#!/usr/bin/env python3
"""Optimal alpha as a function of chain length, approaching the ring value 0.75."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from chainfair import optimal_alpha_curve
from chainfair.svg import line_chart

OUT = os.path.join(os.path.dirname(__file__), "..", "out")
NS = [3, 5, 7, 10, 15, 20, 30, 50, 75, 100, 150, 200, 350, 500]

if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    rows = optimal_alpha_curve(NS)
    csv_path = os.path.join(OUT, "optimal_alpha.csv")
    with open(csv_path, "w") as f:
        f.write("n,alpha_hat\n")
        for n, a in rows:
            f.write(f"{n},{a!r}\n")
    svg_path = os.path.join(OUT, "optimal_alpha.svg")
    with open(svg_path, "w") as f:
        f.write(
            line_chart(
                rows,
                title="Optimal alpha vs chain length",
                xlabel="n",
                ylabel="alpha_hat",
            )
        )
    print(csv_path)
    print(svg_path)

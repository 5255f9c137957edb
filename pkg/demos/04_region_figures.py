"""Reproduce the weight-region figures.

For the rank one and two cases the pic lattice splits into sign regions
indexed by subsets J of the spherical roots.  Around the base point
lambda_0 the subset is read off the coordinate signs: gamma_i enters J
exactly when the i-th offset is <= 0.  This script writes the five
figures as SVG files with a sidecar classification file each.
"""

import os

from wondercoh import build_case, region_plot

OUT = os.path.join(os.path.dirname(__file__), "figures")
os.makedirs(OUT, exist_ok=True)

for name, stem in [
    ("PSO/PSO(3)", "pso_pso_3"),
    ("SO7/G2", "so7_g2"),
    ("group:A2", "pgl3_pgl3"),
    ("PGL/PSp(3)", "pgl6_psp6"),
    ("E6/F4", "e6_f4"),
]:
    X = build_case(name)
    for kind in ("Omega", "R"):
        plot = region_plot(X, kind, -4, 4)
        svg_path = os.path.join(OUT, f"{stem}_{kind.lower()}.svg")
        cls_path = os.path.join(OUT, f"{stem}_{kind.lower()}.cls")
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(plot.svg())
        with open(cls_path, "w", encoding="utf-8") as fh:
            fh.write(plot.sidecar())
    marks = {mask for _, mask in region_plot(X, "Omega", -4, 4).points}
    print(f"{name:<12} rank {X.rank}: J classes on the grid -> {sorted(marks)}")

print()
print("figures written to", OUT)

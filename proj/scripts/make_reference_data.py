#!/usr/bin/env python3
"""Regenerate the checked-in reference colormap tables from matplotlib.

Writes data/viridis_256.csv and data/jet_256.csv as 256 rows of
"r,g,b" floats in [0,1]. See data/README.md for provenance.
"""
import matplotlib

OUT = {
    "viridis": "data/viridis_256.csv",
    "jet": "data/jet_256.csv",
}

for name, path in OUT.items():
    cmap = matplotlib.colormaps[name]
    with open(path, "w") as fh:
        for i in range(256):
            r, g, b, _ = cmap(i / 255.0)
            fh.write(f"{r:.8f},{g:.8f},{b:.8f}\n")
    print(f"wrote {path}")

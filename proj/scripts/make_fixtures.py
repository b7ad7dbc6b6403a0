#!/usr/bin/env python3
"""Regenerate the checked-in synthetic field fixtures under data/fixtures/.

vortex:   96x96 two-channel field v = (-y, x) on a grid centered at the
          image midpoint (y axis pointing up), so magnitude grows radially
          and the angle sweeps one full turn per revolution.
twophase: 96x64 three-channel composition field; left half is pure
          channel 2 at 60% of the total-intensity ceiling, right half an
          equal mix of channels 1 and 3 at the ceiling (1000 counts).
"""
import json
import struct

def write_field(stem, width, height, channels, values):
    header = {
        "width": width,
        "height": height,
        "channels": channels,
        "dtype": "f32",
        "byte_order": "LE",
        "layout": "row-major-interleaved",
    }
    with open(f"data/fixtures/{stem}.header.json", "w") as fh:
        json.dump(header, fh, indent=2)
        fh.write("\n")
    assert len(values) == width * height * channels
    with open(f"data/fixtures/{stem}.f32", "wb") as fh:
        fh.write(struct.pack(f"<{len(values)}f", *values))
    print(f"wrote data/fixtures/{stem}.{{header.json,f32}}")

W = H = 96
cx = (W - 1) / 2.0
cy = (H - 1) / 2.0
vals = []
for row in range(H):
    for col in range(W):
        x = col - cx
        y = cy - row  # image rows grow downward; flip so +y is up
        vals += [-y, x]
write_field("vortex", W, H, 2, vals)

W2, H2 = 96, 64
total = 1000.0
vals = []
for row in range(H2):
    for col in range(W2):
        if col < W2 // 2:
            vals += [0.0, 0.6 * total, 0.0]
        else:
            vals += [0.5 * total, 0.0, 0.5 * total]
write_field("twophase", W2, H2, 3, vals)

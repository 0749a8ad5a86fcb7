"""
Nimber period rasters
=====================

One band per ruleset, one pixel column per heap size starting at x = 1:
purple 0, blue 1, green 2, yellow 3.  Images are written as binary PPM.
"""
import sys
from pathlib import Path

from sinksub.render import render_family

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(exist_ok=True)

render_family(19, "per_k", scale=4, out=out / "m19.ppm")
for m in (5, 6, 7):
    render_family(m, "per_k", scale=8, out=out / f"m{m}.ppm")
render_family(3, "per_delta_class", scale=8, out=out / "m3_d4.ppm", d=4, layers=6)
render_family(4, "per_delta_class", scale=8, out=out / "m4_d7.ppm", d=7, layers=6)
print(sorted(p.name for p in out.iterdir()))

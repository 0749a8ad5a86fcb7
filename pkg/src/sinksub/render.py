"""Nimber-period raster images written as binary PPM (P6)."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .additive import period_formula, reduce_params
from .nimcore import grundy_sequence

PALETTE = {
    0: (100, 40, 140),   # purple
    1: (40, 80, 220),    # blue
    2: (40, 170, 80),    # green
    3: (240, 200, 40),   # yellow
}
BACKGROUND = (255, 255, 255)


@dataclass(frozen=True)
class NimberRaster:
    rows: tuple[tuple[str, np.ndarray], ...]
    palette: dict = field(default_factory=lambda: dict(PALETTE))
    background: tuple[int, int, int] = BACKGROUND

    @property
    def width(self) -> int:
        return max(len(w) for _, w in self.rows)

    def pixels(self, scale: int = 1) -> np.ndarray:
        """``(len(rows) * scale, width, 3)`` uint8 image."""
        if scale < 1:
            raise ValueError("scale must be positive")
        lut = np.array([self.palette[v] for v in range(max(self.palette) + 1)], dtype=np.uint8)
        img = np.empty((len(self.rows), self.width, 3), dtype=np.uint8)
        img[:] = self.background
        for r, (label, word) in enumerate(self.rows):
            word = np.asarray(word)
            if word.size and word.max() >= len(lut):
                raise ValueError(f"row {label!r} has value {word.max()} with no palette entry")
            img[r, :len(word)] = lut[word]
        return np.repeat(img, scale, axis=0)


def ppm_bytes(img: np.ndarray) -> bytes:
    h, w, _ = img.shape
    return b"P6\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(img, dtype=np.uint8).tobytes()


def read_ppm(data: bytes) -> np.ndarray:
    magic, w, h, maxval, rest = data.split(maxsplit=4)
    if magic != b"P6" or int(maxval) != 255:
        raise ValueError("not an 8-bit P6 image")
    return np.frombuffer(rest, dtype=np.uint8).reshape(int(h), int(w), 3)


def _period_row(m: int, delta: int) -> np.ndarray:
    # One formula period of the brute-force sequence, starting at x = 1.
    p = period_formula(reduce_params(m, delta))
    return grundy_sequence((m, m + delta, 2 * m + delta), "sink", p).values


def family_raster(m: int, mode: str = "per_k", d: int | None = None,
                  layers: int = 4) -> NimberRaster:
    """Rows for ``delta = m + k``, ``k = 1..m-1`` (``per_k``), or for
    ``delta = d + 2mn``, ``n = 0..layers-1`` (``per_delta_class``)."""
    if mode == "per_k":
        if m < 2:
            raise ValueError("per_k needs m >= 2")
        rows = tuple((f"k={k}", _period_row(m, m + k)) for k in range(1, m))
    elif mode == "per_delta_class":
        if d is None:
            raise ValueError("per_delta_class needs d")
        if not 0 <= d < 2 * m:
            raise ValueError(f"d must lie in [0, {2 * m})")
        start = 1 if d == 0 else 0
        rows = tuple((f"n={n}", _period_row(m, d + 2 * m * n))
                     for n in range(start, start + layers))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return NimberRaster(rows)


def render_family(m: int, mode: str = "per_k", scale: int = 1, out=None,
                  d: int | None = None, layers: int = 4) -> bytes:
    data = ppm_bytes(family_raster(m, mode, d, layers).pixels(scale))
    if isinstance(out, (str, os.PathLike)):
        with open(out, "wb") as fh:
            fh.write(data)
    elif out is not None:
        out.write(data)
    return data


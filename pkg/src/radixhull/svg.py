"""Byte-deterministic SVG and CSV writers for clouds and hull overlays."""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

import numpy as np


def fmt(x: float) -> str:
    """12 significant digits, no negative zero."""
    s = format(float(x), ".12g")
    return "0" if s in ("-0", "0") else s


def num(x: float) -> float:
    """Round-trip a float through :func:`fmt` for JSON output."""
    return float(fmt(x))


def render_svg(
    cloud_points: np.ndarray,
    hull_vertices: Sequence[complex],
    title: str = "",
    meta: dict | None = None,
    hull_class: str = "hull",
) -> str:
    """Cloud as dots, hull as a closed polyline; the y axis points up."""
    hull = [complex(v) for v in hull_vertices]
    xs = [v.real for v in hull]
    ys = [-v.imag for v in hull]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    size = max(x1 - x0, y1 - y0) or 1.0
    margin = 0.05 * size
    vx, vy = x0 - margin, y0 - margin
    vw, vh = (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin
    box = max(vw, vh)
    r = 0.0015 * box
    stroke = 0.004 * box
    px_w = 800
    px_h = max(1, round(800 * vh / vw))

    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n')
    out.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px_w}" height="{px_h}" '
        f'viewBox="{fmt(vx)} {fmt(vy)} {fmt(vw)} {fmt(vh)}">\n'
    )
    if title:
        out.write(f"<title>{_esc(title)}</title>\n")
    if meta is not None:
        out.write(f"<desc>{_esc(json.dumps(meta, sort_keys=True))}</desc>\n")
    out.write('<rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>\n'.format(fmt(vx), fmt(vy), fmt(vw), fmt(vh)))
    out.write('<g id="cloud" fill="#1f4e79" stroke="none">\n')
    rs = fmt(r)
    for z in np.asarray(cloud_points, dtype=complex).ravel():
        out.write(f'<circle cx="{fmt(z.real)}" cy="{fmt(-z.imag)}" r="{rs}"/>\n')
    out.write("</g>\n")
    pts = " ".join(f"{fmt(v.real)},{fmt(-v.imag)}" for v in hull + hull[:1])
    out.write(
        f'<polyline id="hull" class="{_esc(hull_class)}" points="{pts}" fill="none" '
        f'stroke="#c0392b" stroke-width="{fmt(stroke)}" stroke-linejoin="round"/>\n'
    )
    out.write("</svg>\n")
    return out.getvalue()


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


CSV_COLUMNS = ("re", "im", "word", "kind")


def render_csv(rows: Iterable[tuple[complex, str, str]]) -> str:
    """Rows of (point, word, kind) with a header line."""
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for z, word, kind in rows:
        w.writerow((fmt(z.real), fmt(z.imag), word, kind))
    return out.getvalue()

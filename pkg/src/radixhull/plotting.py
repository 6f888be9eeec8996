"""Matplotlib figures of point clouds with their convex hulls."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

RC = {
    "font.size": 10,
    "axes.linewidth": 0.8,
    "savefig.dpi": 200,
    "savefig.bbox": "tight",
    "svg.hashsalt": "radixhull",
}


def cloud_figure(points: np.ndarray, hull: Sequence[complex], title: str = "", convex: bool | None = None):
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5, 5))
        pts = np.asarray(points, dtype=complex)
        ax.scatter(pts.real, pts.imag, s=0.3, c="#1f4e79", linewidths=0, rasterized=True)
        h = list(hull) + list(hull[:1])
        ax.plot([z.real for z in h], [z.imag for z in h], color="#c0392b", lw=1.0)
        ax.set_aspect("equal")
        ax.set_xlabel("Re")
        ax.set_ylabel("Im")
        if convex is not None:
            title = f"{title}  [{'convex' if convex else 'not convex'}]" if title else ("convex" if convex else "not convex")
        if title:
            ax.set_title(title)
    return fig


def save_cloud_figure(path: str | Path, points, hull, title: str = "", convex: bool | None = None) -> Path:
    path = Path(path)
    fig = cloud_figure(points, hull, title, convex)
    with plt.rc_context(RC):
        fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path

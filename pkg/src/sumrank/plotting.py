"""Render bound curves to image files.

The CLI emits CSV by default; when asked to write a report directory it also
renders the same curves with matplotlib so figures land next to the data.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bounds import BoundCurve  # noqa: E402


def render_curves(curves: list[tuple[str, BoundCurve]], path: str | Path,
                  title: str = "") -> Path:
    """Plot labeled curves (rates clamped to [0, 1]) and save to ``path``.

    Returns the written path.
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4.2))
    for label, curve in curves:
        pts = curve.clamped().samples
        if not pts:
            continue
        ax.plot([d for d, _ in pts], [r for _, r in pts], label=label, linewidth=1.4)
    ax.set_xlabel(r"relative sum-rank distance $\delta_{sr}$")
    ax.set_ylabel(r"rate $R_{sr}$")
    ax.set_ylim(bottom=0)
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    if curves:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

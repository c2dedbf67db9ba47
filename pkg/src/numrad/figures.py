"""Optional matplotlib renderings for boundary and bound-report output.

Imported only when a figure path is requested, so the rest of the package
works without a display or matplotlib cache.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import LOWER, BoundsReport


def boundary_figure(points, out_path: str) -> None:
    """Render the sampled boundary curve as a closed loop in the plane."""
    zs = np.array([z for _, z in points], dtype=complex)
    loop = np.append(zs, zs[:1])
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.plot(loop.real, loop.imag, lw=1.2)
    ax.fill(loop.real, loop.imag, alpha=0.12)
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.axvline(0.0, color="gray", lw=0.5)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title("numerical range boundary")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def bounds_figure(report: BoundsReport, out_path: str) -> None:
    """Render the bound catalog as horizontal bars against the reference radius."""
    entries = report.entries
    names = [e.name for e in entries]
    values = [e.value for e in entries]
    colors = ["#4878a8" if e.kind == LOWER else "#b05a4a" for e in entries]
    ypos = np.arange(len(entries))[::-1]

    fig, ax = plt.subplots(figsize=(7.0, 0.42 * len(entries) + 1.6))
    bars = ax.barh(ypos, values, color=colors, height=0.62)
    for bar, e in zip(bars, entries):
        if not e.valid:
            bar.set_hatch("//")
            bar.set_alpha(0.45)
        if e.name == report.best_lower:
            bar.set_edgecolor("black")
            bar.set_linewidth(1.4)
    ax.axvline(report.reference_w, color="black", ls="--", lw=1.0,
               label=f"w = {report.reference_w:.6g}")
    ax.set_yticks(ypos)
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("bound value")
    ax.set_title("radius bounds (hatched = failed validity check)")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)

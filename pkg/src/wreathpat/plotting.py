"""Matplotlib figures for the report commands.

All functions write a file and return its path; nothing is shown on screen.
"""
from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .bijection import LatticePath, reverse_irreducible_blocks, to_lattice_path  # noqa: E402
from .core import ColoredPermutation  # noqa: E402

COLOR_CYCLE = ["tab:blue", "tab:red", "tab:green", "tab:orange", "tab:purple"]


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return path


def plot_bijection(g: ColoredPermutation, path: str | Path, lattice: LatticePath | None = None) -> Path:
    """Matrix diagram with block outlines, dots colored by w, and the lattice path."""
    n = len(g)
    if lattice is None:
        lattice = to_lattice_path(g)
    fig, ax = plt.subplots(figsize=(4 + 0.3 * n, 4 + 0.3 * n))
    for i in range(n + 1):
        ax.plot([i, i], [0, n], color="0.85", lw=0.6)
        ax.plot([0, n], [i, i], color="0.85", lw=0.6)
    for start, stop in reverse_irreducible_blocks(g.perm).blocks:
        lo = min(g.perm[start:stop]) - 1
        side = stop - start
        ax.add_patch(Rectangle((start, lo), side, side, fill=False, lw=1.4, ec="black"))
    for i, (v, c) in enumerate(zip(g.perm, g.colors)):
        ax.plot(i + 0.5, v - 0.5, "o", ms=9, color=COLOR_CYCLE[c % len(COLOR_CYCLE)])
        ax.annotate(str(c), (i + 0.5, v - 0.5), ha="center", va="center", fontsize=7, color="white")
    xs, ys = zip(*lattice.points())
    ax.plot(xs, ys, color="tab:green", lw=2.2, label="path")
    ax.plot([0, n + 1], [n + 1, 0], ls="--", color="0.4", lw=1, label=f"y = -x + {n + 1}")
    ax.set_xlim(-0.3, n + 1.3)
    ax.set_ylim(-0.3, n + 1.3)
    ax.set_aspect("equal")
    ax.set_title(f"{g}\n{lattice.steps}", fontsize=9)
    ax.legend(loc="upper right", fontsize=7)
    return _finish(fig, path)


def plot_sequence(values: Sequence[int], path: str | Path, label: str = "", reference: Sequence[int] | None = None,
                  start: int = 1) -> Path:
    """Counts against n on a log scale, optionally overlaid with reference terms."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = list(range(start, start + len(values)))
    ax.semilogy(ns, [max(v, 1) for v in values], "o-", label=label or "enumeration")
    if reference is not None:
        ref = list(reference)[: len(values)]
        ax.semilogy(ns[: len(ref)], [max(v, 1) for v in ref], "x", ms=10, label="reference")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    return _finish(fig, path)


def plot_distribution(table: Mapping[int, int], path: str | Path, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    js = sorted(table)
    ax.bar(js, [table[j] for j in js], color="tab:blue")
    ax.set_xlabel("occurrences j")
    ax.set_ylabel("elements")
    if title:
        ax.set_title(title)
    return _finish(fig, path)

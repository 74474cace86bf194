"""Figures for the CLI: brick diagrams with their linking graphs, census histograms."""

from __future__ import annotations

from collections import Counter
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch, Polygon, Rectangle  # noqa: E402

from .braidword import as_word, linking_graph_with_bricks  # noqa: E402
from .planegraph import Condition1Violation, colouring  # noqa: E402


def plot_linking_graph(word, path: str, title: str | None = None) -> None:
    """Brick diagram of ``word`` with its linking graph drawn on top, saved to ``path``."""
    word = as_word(word)
    g, bricks = linking_graph_with_bricks(word)
    pos = {v: (b.column + 0.5, float(b.start + b.end) / 2) for v, b in bricks.items()}
    fig, ax = plt.subplots(figsize=(1.2 + 0.9 * word.strands, 1.0 + 0.45 * max(len(word), 1)))

    try:
        faces = colouring(g)
    except Condition1Violation:
        faces = {}
    for walk, colour in faces.items():
        pts = [pos[d[1]] for d in walk]
        ax.add_patch(Polygon(pts, closed=True, facecolor="0.25" if colour == "black" else "0.92",
                             edgecolor="none", alpha=0.35, zorder=0))

    for s in range(1, word.strands + 1):
        ax.plot([s, s], [0.5, len(word) + 0.5], color="0.6", lw=1, zorder=1)
    for k, i in enumerate(word.letters, start=1):
        ax.plot([i, i + 1], [k, k], color="0.3", lw=2, zorder=1)
    for v, b in bricks.items():
        ax.add_patch(Rectangle((b.column + 0.08, b.start), 0.84, b.end - b.start,
                               fill=False, edgecolor="tab:blue", lw=0.8, zorder=2))

    for eid, t, h in g.edges:
        ax.add_patch(FancyArrowPatch(pos[t], pos[h], arrowstyle="-|>", mutation_scale=12,
                                     color="tab:red", lw=1.4, shrinkA=6, shrinkB=6, zorder=3))
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=60, color="tab:red", zorder=4)
    for v, (x, y) in pos.items():
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(6, -10), fontsize=8)

    ax.set_xlim(0.5, word.strands + 0.5)
    ax.set_ylim(len(word) + 0.5, 0.5)
    ax.set_xticks(range(1, word.strands + 1))
    ax.set_yticks([])
    ax.set_aspect("equal")
    ax.set_title(title or f"linking graph of {word}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_census(records: Iterable, path: str) -> None:
    """Bar chart per genus: canonical words, distinct graphs and distinct fingerprints."""
    records = list(records)
    words = Counter()
    graphs = Counter()
    prints: dict[int, set] = {}
    for r in records:
        words[r.genus] += r.class_size
        graphs[r.genus] += 1
        prints.setdefault(r.genus, set()).add(r.fingerprint.key())
    genera = sorted(graphs)
    x = range(len(genera))
    fig, ax = plt.subplots(figsize=(1.5 + 1.2 * len(genera), 3.2))
    width = 0.27
    series = [("canonical words", [words[g] for g in genera]),
              ("oriented graphs", [graphs[g] for g in genera]),
              ("fingerprints", [len(prints[g]) for g in genera])]
    for k, (label, vals) in enumerate(series):
        bars = ax.bar([i + (k - 1) * width for i in x], vals, width, label=label)
        ax.bar_label(bars, fontsize=7)
    ax.set_yscale("log")
    ax.set_xticks(list(x))
    ax.set_xticklabels([f"g={g}" for g in genera])
    ax.set_ylabel("count")
    ax.legend(fontsize=7)
    ax.set_title("positive braid knot census", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

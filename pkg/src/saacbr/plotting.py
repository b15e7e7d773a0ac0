"""Matplotlib figures for debates and evaluation reports.

Figures are written straight to files with the Agg backend, so nothing here
needs a display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .mining import BipolarFramework, EdgeKind  # noqa: E402

# mirrors the DOT export: solid attacks, double supports, dashed supported attacks
EDGE_STYLES = {
    EdgeKind.DIRECT: dict(linestyle="solid", color="black"),
    EdgeKind.EQUAL: dict(linestyle="solid", color="black"),
    EdgeKind.IRRELEVANCE: dict(linestyle="solid", color="0.6"),
    EdgeKind.SUPPORTED: dict(linestyle="dashed", color="black"),
    EdgeKind.SECONDARY: dict(linestyle="dotted", color="black"),
}
SUPPORT_STYLE = dict(linestyle="solid", color="tab:blue", linewidth=2.5)


def _depths(framework) -> dict:
    """Height of each case: length of the longest strictly descending chain below it."""
    cases = {a: arg for a, arg in framework.arguments.items() if a != framework.new_id}
    depth = {}

    def height(a):
        if a not in depth:
            x = cases[a].characterisation
            below = [b for b, arg in cases.items() if x.exceeds(arg.characterisation)]
            depth[a] = 1 + max((height(b) for b in below), default=-1)
        return depth[a]

    for a in cases:
        height(a)
    return depth


def layout(framework) -> dict:
    depth = _depths(framework)
    rows = {}
    for a in sorted(depth):
        rows.setdefault(depth[a], []).append(a)
    pos = {}
    for level, members in rows.items():
        for i, a in enumerate(members):
            pos[a] = (i * 3.0, float(level))
    top = max(rows, default=0)
    width = max((len(m) for m in rows.values()), default=1)
    pos[framework.new_id] = (width * 3.0, float(top + 1))
    return pos


def plot_framework(framework, path, title=None) -> None:
    """Draw a bipolar or attack framework and save it to ``path``."""
    pos = layout(framework)
    fig, ax = plt.subplots(figsize=(8, 1.2 * (max(y for _, y in pos.values()) + 2)))
    for a, (x, y) in sorted(pos.items()):
        arg = framework.arguments[a]
        outcome = "?" if arg.outcome is None else arg.outcome
        ax.text(x, y, f"{a} = ({arg.characterisation}, {outcome})", ha="center", va="center",
                bbox=dict(boxstyle="round", facecolor="white", edgecolor="0.7"), fontsize=9)

    def arrow(s, t, **style):
        ax.add_patch(FancyArrowPatch(pos[s], pos[t], arrowstyle="-|>", mutation_scale=12,
                                     shrinkA=14, shrinkB=14, connectionstyle="arc3,rad=0.15",
                                     **style))

    edges = framework.attacks if isinstance(framework, BipolarFramework) else framework.edges
    for e in sorted(edges):
        arrow(e.source, e.target, **EDGE_STYLES[e.kind])
    if isinstance(framework, BipolarFramework):
        for s, t in sorted(framework.supports):
            arrow(s, t, **SUPPORT_STYLE)

    xs = [x for x, _ in pos.values()]
    ys = [y for _, y in pos.values()]
    ax.set_xlim(min(xs) - 2, max(xs) + 2)
    ax.set_ylim(min(ys) - 0.7, max(ys) + 0.7)
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_evaluation(report, path, title="Evaluation") -> None:
    """Confusion matrix next to the spike count of every fold."""
    labels = list(report.outcomes)
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))

    matrix = [[report.confusion[(a, p)] for p in labels] for a in labels]
    left.imshow(matrix, cmap="Blues")
    for i, row in enumerate(matrix):
        for j, n in enumerate(row):
            left.text(j, i, str(n), ha="center", va="center")
    left.set_xticks(range(len(labels)), labels)
    left.set_yticks(range(len(labels)), labels)
    left.set_xlabel("predicted")
    left.set_ylabel("actual")
    left.set_title(f"accuracy {report.accuracy:.3f} ({report.correct}/{report.total})")

    ids = [row[0] for row in report.rows]
    right.bar(range(len(ids)), report.spike_counts, color="tab:orange")
    right.set_xticks(range(len(ids)), ids, rotation=90, fontsize=7)
    right.set_ylabel("spikes")
    right.set_title("spikes per fold")

    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)

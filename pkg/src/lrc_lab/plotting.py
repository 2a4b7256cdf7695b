"""Figure rendering for the report paths.

When a subcommand is given an output directory, it writes PNG figures next
to the JSON / delimited output: a weight-distribution bar chart for
`analyze`, a bound chart for `bound`, and a nonzero-pattern plot of the
[H1; H2] form for `normal-form`.  Everything uses the Agg backend so the
CLI never needs a display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import BoundReport
from .lrc import NormalForm


def weight_distribution_figure(weights: dict[int, int], title: str, path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    xs = sorted(weights)
    ys = [weights[w] for w in xs]
    ax.bar(xs, ys, color="#3465a4", width=0.8)
    ax.set_yscale("log")
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    ax.set_xticks(xs)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def bounds_figure(reports: list[BoundReport], q: int | None, path) -> None:
    """Horizontal bars for finite values; advisory rows are annotated only."""
    finite = [r for r in reports if r.value is not None]
    advisory = [r for r in reports if r.value is None]
    rows = len(finite) + len(advisory)
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.45 * rows + 1)))
    labels = []
    for i, r in enumerate(finite):
        ax.barh(i, r.value, color="#4e9a06")
        ax.text(r.value, i, f" {r.value}", va="center", fontsize=8)
        labels.append(r.name)
    for j, r in enumerate(advisory):
        y = len(finite) + j
        ax.text(0.5, y, r.render_value() + "  [" + ", ".join(r.conditions) + "]",
                va="center", fontsize=8, color="#75507b")
        labels.append(r.name)
    ax.set_yticks(range(rows))
    ax.set_yticklabels(labels, fontsize=8)
    ax.set_xscale("symlog")
    ax.set_xlabel("certified value")
    ax.set_title("bound calculator" + (f" (q = {q})" if q else ""))
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def normal_form_figure(nf: NormalForm, path) -> None:
    """Nonzero pattern of [H1; H2] with the A/B column split marked."""
    stacked = nf.stacked().entries
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.imshow(stacked != 0, cmap="Greys", aspect="auto", interpolation="none")
    ax.axhline(nf.ell - 0.5, color="#cc0000", linewidth=1.2)
    for col1 in nf.b_set:
        ax.axvspan(col1 - 1.5, col1 - 0.5, color="#fce94f", alpha=0.35)
    ax.set_xlabel("coordinate (B columns shaded)")
    ax.set_ylabel(f"dual basis row (H1 above line, ell={nf.ell}, h={nf.h})")
    ax.set_title(f"normal form, r = {nf.r}, |A| = {len(nf.a_set)}, |B| = {len(nf.b_set)}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

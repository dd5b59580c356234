"""Report rendering for the CLI experiment paths.

Every experiment writes a small bundle into its output directory: the
transcripts and certificates as JSON (Lines), a delimited summary table,
and a figure visualizing the verdict structure.  Figures use the Agg
backend so rendering works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
    return path


def write_text(path: Path, text: str) -> Path:
    path = Path(path)
    path.write_text(text)
    return path


def _verdict_axes(ax, labels, verdicts, title):
    colors = ["#2a9d8f" if v else "#e76f51" for v in verdicts]
    ax.bar(range(len(labels)), [1] * len(labels), color=colors)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
    ax.set_yticks([])
    ax.set_title(title, fontsize=10)


def verdict_timeline_figure(path: Path, panels: Sequence[tuple]) -> Path:
    """One panel per (title, labels, boolean verdicts): green accepted,
    red rejected, in query order."""
    fig, axes = plt.subplots(len(panels), 1,
                             figsize=(max(4, max(len(p[1]) for p in panels) * 0.45),
                                      1.6 * len(panels)))
    if len(panels) == 1:
        axes = [axes]
    for ax, (title, labels, verdicts) in zip(axes, panels):
        _verdict_axes(ax, labels, verdicts, title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def axiom_report_figure(path: Path, rows: Sequence[dict]) -> Path:
    """Pass/fail grid for axiom checks: one bar per (axiom, mode)."""
    labels = [f"{r['axiom']}/{r['mode']}" for r in rows]
    passed = [r["passed"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(4, len(labels) * 0.9), 2.4))
    ax.bar(range(len(labels)), [1] * len(labels),
           color=["#2a9d8f" if p else "#e76f51" for p in passed])
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=9)
    ax.set_yticks([])
    ax.set_title("axiom checks (green pass, red fail)", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def witness_length_figure(path: Path, ns: Sequence[int], ks: Sequence[int]) -> Path:
    """Witness length against the 2n bound."""
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.scatter(ns, ks, s=14, color="#264653", label="witness length k", zorder=3)
    xs = sorted(set(ns))
    ax.plot(xs, [2 * x for x in xs], color="#e76f51", label="bound 2n")
    ax.set_xlabel("word length n")
    ax.set_ylabel("k")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def growth_figure(path: Path, sizes: Sequence[tuple], title: str) -> Path:
    """Automaton growth over queries: (states, transitions, accepting)."""
    fig, ax = plt.subplots(figsize=(5, 3.2))
    idx = range(len(sizes))
    ax.plot(idx, [s[0] for s in sizes], label="states")
    ax.plot(idx, [s[1] for s in sizes], label="transitions")
    ax.plot(idx, [s[2] for s in sizes], label="accepting")
    ax.set_xlabel("query")
    ax.set_ylabel("count")
    ax.set_title(title, fontsize=10)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def box513_figure(path: Path, sequences: Sequence[tuple]) -> Path:
    """Answers over time for the numeric box: one panel per query order."""
    fig, axes = plt.subplots(len(sequences), 1, figsize=(5, 1.8 * len(sequences)))
    if len(sequences) == 1:
        axes = [axes]
    for ax, (title, queries, answers) in zip(axes, sequences):
        ax.step(range(len(answers)), answers, where="mid", color="#264653")
        ax.set_xticks(range(len(queries)))
        ax.set_xticklabels(queries, fontsize=8)
        ax.set_yticks([1, 2, 3])
        ax.set_ylim(0.5, 3.5)
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)

"""Figures for scan reports and structure-constant tables."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def plot_scan_report(report: dict, path) -> Path:
    """Attempted vs passed checks per total size, one panel per check class."""
    by_size = report["by_size"]
    classes = list(by_size)
    path = Path(path)
    with plt.rc_context(RC):
        fig, axes = plt.subplots(1, max(1, len(classes)), figsize=(3.6 * max(1, len(classes)), 2.8),
                                 squeeze=False)
        for ax, cls in zip(axes[0], classes):
            sizes = [int(s) for s in by_size[cls]]
            attempted = [v["attempted"] for v in by_size[cls].values()]
            passed = [v["passed"] for v in by_size[cls].values()]
            failed = [a - p for a, p in zip(attempted, passed)]
            ax.bar(sizes, passed, color="0.55", label="passed")
            ax.bar(sizes, failed, bottom=passed, color="tab:red", label="failed")
            ax.set_xlabel("total size |lam| + |mu|")
            ax.set_ylabel("checks")
            ax.set_title(cls)
            if sizes:
                ax.set_xticks(sizes)
            if any(failed):
                ax.legend(frameon=False)
        fig.suptitle(report["command"], fontsize=8)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_struct_curves(table, path, alphas=None) -> Path:
    """f^nu(a) against a on a grid of positive rationals, one curve per nu."""
    from .partition import format_partition

    if alphas is None:
        alphas = [Fraction(k, 8) for k in range(1, 33)]
    path = Path(path)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(4.2, 3.0))
        xs = [float(a) for a in alphas]
        for nu, f in table.entries.items():
            ys = [float(f(a)) for a in alphas]
            ax.plot(xs, ys, label=f"({format_partition(nu)})")
        for m in (1, 2, 4, 8):
            ax.axvline(2 / m, color="0.85", lw=0.8, zorder=0)
        ax.set_xlabel("a")
        ax.set_ylabel("f(a)")
        ax.set_title(f"P({format_partition(table.lam)}) * P({format_partition(table.mu)})")
        ax.legend(frameon=False, ncol=2)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path

"""Matplotlib figure rendering for the CLI report paths (headless Agg)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def spectrum_figure(report, path):
    """Bar chart of the (a, b)-pair multiplicity per solution count."""
    counts = sorted(report.histogram)
    mults = [report.histogram[c] for c in counts]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar([str(c) for c in counts], mults, color="#4878b0")
    ax.set_yscale("log")
    ax.set_xlabel("solutions per (a, b)")
    ax.set_ylabel("number of pairs")
    ax.set_title(f"GF({report.p}^{report.n}), c={report.c}: "
                 f"uniformity {report.delta}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def sweep_figure(reports, path):
    """Uniformity per c index for a sweep."""
    cs = [r.c for r in reports]
    deltas = [r.delta for r in reports]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(cs, deltas, ".", markersize=4, color="#4878b0")
    ax.set_xlabel("c (element index)")
    ax.set_ylabel("uniformity")
    if reports:
        ax.set_title(f"GF({reports[0].p}^{reports[0].n}): uniformity over c")
        ax.set_ylim(0, max(deltas) + 1)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def distribution_figure(dist, path, title=""):
    """Bar chart of a size/frequency distribution report."""
    sizes = sorted(dist.sizes)
    freqs = [dist.sizes[s] for s in sizes]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar([str(s) for s in sizes], freqs, color="#6aa66a")
    ax.set_xlabel("size")
    ax.set_ylabel("frequency")
    ax.set_title(title or dist.note)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def records_figure(records, path):
    """Stacked PASS/FAIL/SKIP counts per theorem tag."""
    theorems = sorted({r.theorem for r in records})
    verdicts = ("PASS", "FAIL", "SKIP")
    colors = {"PASS": "#6aa66a", "FAIL": "#c44e52", "SKIP": "#b0b0b0"}
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    bottom = [0] * len(theorems)
    for v in verdicts:
        heights = [sum(1 for r in records if r.theorem == t and r.verdict == v)
                   for t in theorems]
        ax.bar(theorems, heights, bottom=bottom, label=v, color=colors[v])
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_ylabel("records")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

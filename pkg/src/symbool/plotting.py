"""Survey figures rendered to files (headless backend, no display)."""

from __future__ import annotations

from typing import Sequence


def save_survey_figure(records: Sequence, path: str) -> None:
    """Two-panel PNG: immunity histogram, and per-function immunity by
    value-vector integer with the trivial-balanced subset highlighted."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if not records:
        raise ValueError("nothing to plot")
    n = records[0].n
    bound = (n + 1) // 2
    counts = [0] * (bound + 1)
    for r in records:
        counts[r.ai] += 1

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.bar(range(bound + 1), counts, color="#4878a8")
    ax1.set_xticks(range(bound + 1))
    ax1.set_xlabel("algebraic immunity")
    ax1.set_ylabel("functions")
    ax1.set_title(f"immunity distribution, n={n}")

    ax2.scatter(
        [r.value_vector.v for r in records],
        [r.ai for r in records],
        s=6,
        color="#a0a0a0",
        label="all",
    )
    tb = [r for r in records if r.trivial_balanced]
    if tb:
        ax2.scatter(
            [r.value_vector.v for r in tb],
            [r.ai for r in tb],
            s=14,
            color="#c03028",
            label="trivial balanced",
        )
        ax2.legend(loc="lower right", fontsize=8)
    ax2.set_xlabel("value vector (as integer)")
    ax2.set_ylabel("algebraic immunity")
    ax2.set_title("immunity by value vector")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

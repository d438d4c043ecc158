"""Figure for a battery run: verdict counts per claim."""

from __future__ import annotations

from pathlib import Path

from .reports import CheckReport, FAIL, PASS, SKIPPED

COLORS = {PASS: "#4c956c", SKIPPED: "#bdbdbd", FAIL: "#c0392b"}


def plot_verdicts(reports: list[CheckReport], path: str | Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    claims: list[str] = []
    counts: dict[str, dict[str, int]] = {}
    for r in reports:
        if r.claim_id not in counts:
            claims.append(r.claim_id)
            counts[r.claim_id] = {PASS: 0, SKIPPED: 0, FAIL: 0}
        counts[r.claim_id][r.verdict] += 1

    fig, ax = plt.subplots(figsize=(7, 0.35 * len(claims) + 1.2))
    left = [0] * len(claims)
    ys = range(len(claims))
    for v in (PASS, SKIPPED, FAIL):
        widths = [counts[c][v] for c in claims]
        ax.barh(ys, widths, left=left, color=COLORS[v], label=v, height=0.7)
        left = [a + b for a, b in zip(left, widths)]
    ax.set_yticks(list(ys))
    ax.set_yticklabels(claims, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("symlog")
    ax.set_xlabel("instances")
    ax.legend(loc="lower right", fontsize=8, frameon=False)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    path = Path(path)
    # fixed metadata keeps the PNG reproducible
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path

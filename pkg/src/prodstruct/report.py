"""Per-certificate statistics, CSV output, figures and DOT export."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

from .product import ProductCertificate

STATS_COLUMNS = ("n", "m", "parts", "h_vertices", "max_bag", "k5_hubs", "mirror", "max_depth")


def stats_row(cert: ProductCertificate) -> dict[str, int]:
    dec = cert.decomposition
    s = cert.stats or {}
    return {
        "n": cert.graph.n,
        "m": cert.graph.m,
        "parts": len(cert.quotient.parts),
        "h_vertices": cert.quotient.size,
        "max_bag": max((len(b) for b in dec.bags), default=0) if dec else 0,
        "k5_hubs": int(s.get("k5_hubs", 0)),
        "mirror": int(s.get("mirror", 0)),
        "max_depth": int(s.get("max_depth", 0)),
    }


def stats_csv(rows: Iterable[dict], extra: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=[*extra, *STATS_COLUMNS], lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def render_figures(rows: Sequence[dict], out_dir: str | Path, prefix: str = "stats") -> list[Path]:
    """Histogram of largest bag sizes and a scatter of parts against n."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    fig, ax = plt.subplots(figsize=(5, 3.5))
    sizes = [r["max_bag"] for r in rows]
    lo, hi = min(sizes, default=0), max(max(sizes, default=0), 9)
    ax.hist(sizes, bins=range(lo, hi + 2), align="left", rwidth=0.8, color="#4472c4")
    ax.axvline(7, color="black", linestyle="--", linewidth=1, label="bag bound 7")
    ax.axvline(9, color="grey", linestyle=":", linewidth=1, label="bag bound 9")
    ax.set_xlabel("largest bag")
    ax.set_ylabel("certificates")
    ax.legend(frameon=False)
    fig.tight_layout()
    p = out / f"{prefix}_max_bag.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    written.append(p)

    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.scatter([r["n"] for r in rows], [r["parts"] for r in rows], s=10, color="#c0504d")
    ax.set_xlabel("n")
    ax.set_ylabel("vertical paths")
    fig.tight_layout()
    p = out / f"{prefix}_parts_vs_n.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    written.append(p)
    return written


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

DOT_TARGETS = ("H", "tree", "partition")


def _dot_quotient(cert: ProductCertificate) -> list[str]:
    lines = ["graph H {", "  node [shape=circle];"]
    for i, p in enumerate(cert.quotient.parts):
        lines.append(f'  p{i} [label="P{i}\\n{len(p)}"];')
    for a, b in cert.quotient.edges:
        lines.append(f"  p{a} -- p{b};")
    return lines


def _dot_tree(cert: ProductCertificate) -> list[str]:
    dec = cert.decomposition
    lines = ["graph T {", "  node [shape=box];"]
    if dec is None:
        return lines
    anchors = set(dec.anchors)
    for x, bag in enumerate(dec.bags):
        label = ",".join(f"P{a}" for a in sorted(bag))
        style = ", style=bold" if x in anchors else ""
        lines.append(f'  b{x} [label="{label}"{style}];')
    for a, b in dec.tree_edges:
        lines.append(f"  b{a} -- b{b};")
    return lines


def _dot_partition(cert: ProductCertificate) -> list[str]:
    g, h = cert.graph, cert.quotient
    lines = ["graph G {", "  node [shape=circle, style=filled, fontcolor=white];"]
    for v in range(g.n):
        colour = _PALETTE[h.part_of[v] % len(_PALETTE)]
        lines.append(f'  v{v} [fillcolor="{colour}", xlabel="{cert.layers[v]}"];')
    for u, v in g.edges():
        same = h.part_of[u] == h.part_of[v]
        lines.append(f"  v{u} -- v{v}" + (" [penwidth=3];" if same else ";"))
    return lines


def export_dot(cert: ProductCertificate, target: str) -> str:
    builders = {"H": _dot_quotient, "tree": _dot_tree, "partition": _dot_partition}
    if target not in builders:
        raise ValueError(f"unknown DOT target {target!r}; choose from {', '.join(DOT_TARGETS)}")
    return "\n".join(builders[target](cert) + ["}"]) + "\n"

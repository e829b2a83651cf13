"""Static SVG renderers for the report figures.

Deliberately dependency-free and deterministic: same inputs, same bytes.
"""

from __future__ import annotations

import numpy as np

CLUSTER_COLORS = ("#2ca02c", "#d62728", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b")


def _esc(s: str) -> str:
    return (
        str(s)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _heat_color(v: float) -> str:
    """0 -> deep blue, 0.5 -> white, 1 -> deep red."""
    v = min(max(v, 0.0), 1.0)
    if v < 0.5:
        t = v / 0.5
        r, g, b = int(49 + t * 206), int(84 + t * 171), int(158 + t * 97)
    else:
        t = (v - 0.5) / 0.5
        r, g, b = int(255 - t * 52), int(255 - t * 216), int(255 - t * 212)
    return f"#{r:02x}{g:02x}{b:02x}"


def heatmap_svg(codes, acc: np.ndarray, title: str = "Pairwise averaged accuracy") -> str:
    n = len(codes)
    cell = 46
    margin = 80
    legend_w = 60
    width = margin + n * cell + legend_w + 40
    height = margin + n * cell + 30
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="sans-serif" font-size="11">',
        f'<text x="{margin}" y="20" font-size="14">{_esc(title)}</text>',
    ]
    for i, code in enumerate(codes):
        parts.append(
            f'<text x="{margin - 6}" y="{margin + i * cell + cell / 2 + 4}" '
            f'text-anchor="end">{_esc(code)}</text>'
        )
        parts.append(
            f'<text x="{margin + i * cell + cell / 2}" y="{margin - 8}" '
            f'text-anchor="middle">{_esc(code)}</text>'
        )
    for i in range(n):
        for j in range(n):
            x = margin + j * cell
            y = margin + i * cell
            v = acc[i, j]
            if i == j or not np.isfinite(v):
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                    f'fill="#eeeeee" stroke="#ffffff"/>'
                )
            else:
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                    f'fill="{_heat_color(v)}" stroke="#ffffff"/>'
                )
                parts.append(
                    f'<text x="{x + cell / 2}" y="{y + cell / 2 + 4}" '
                    f'text-anchor="middle">{v:.2f}</text>'
                )
    # numeric color legend
    lx = margin + n * cell + 20
    for step in range(11):
        v = 1.0 - step / 10
        ly = margin + step * (n * cell) / 11
        parts.append(
            f'<rect x="{lx}" y="{ly}" width="16" height="{(n * cell) / 11 + 1}" '
            f'fill="{_heat_color(v)}"/>'
        )
        parts.append(f'<text x="{lx + 20}" y="{ly + 10}">{v:.1f}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def scatter_svg(coords: np.ndarray, clusters, true_labels=None,
                title: str = "k-means clusters (2-D projection)") -> str:
    width, height, margin = 520, 420, 50
    xs, ys = coords[:, 0], coords[:, 1]
    spanx = (xs.max() - xs.min()) or 1.0
    spany = (ys.max() - ys.min()) or 1.0

    def px(x):
        return margin + (x - xs.min()) / spanx * (width - 2 * margin)

    def py(y):
        return height - margin - (y - ys.min()) / spany * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="sans-serif" font-size="11">',
        f'<text x="{margin}" y="20" font-size="14">{_esc(title)}</text>',
    ]
    for i in range(len(coords)):
        color = CLUSTER_COLORS[int(clusters[i]) % len(CLUSTER_COLORS)]
        label = _esc(true_labels[i]) if true_labels is not None else ""
        parts.append(
            f'<circle cx="{px(xs[i]):.2f}" cy="{py(ys[i]):.2f}" r="3.5" '
            f'fill="{color}" fill-opacity="0.7"><title>{label}</title></circle>'
        )
    for c in sorted(set(int(c) for c in clusters)):
        parts.append(
            f'<rect x="{width - 110}" y="{40 + c * 18}" width="12" height="12" '
            f'fill="{CLUSTER_COLORS[c % len(CLUSTER_COLORS)]}"/>'
        )
        parts.append(
            f'<text x="{width - 92}" y="{50 + c * 18}">cluster {c}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def boxplot_svg(feature: str, named_groups, test: str = "", statistic: float = 0.0,
                p_value: float = 1.0) -> str:
    """Box-and-whisker panels, one per group (quartile boxes, min/max whiskers)."""
    width_per = 110
    width = 80 + width_per * len(named_groups)
    height = 360
    top, bottom = 60, 40
    all_values = np.concatenate([np.asarray(v, dtype=float) for _, v in named_groups])
    lo, hi = float(all_values.min()), float(all_values.max())
    span = (hi - lo) or 1.0

    def py(v):
        return height - bottom - (v - lo) / span * (height - top - bottom)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="sans-serif" font-size="11">',
        f'<text x="20" y="20" font-size="13">{_esc(feature)}</text>',
        f'<text x="20" y="38">{_esc(test)} statistic={statistic:.4g} p={p_value:.3g}</text>',
    ]
    for i, (name, values) in enumerate(named_groups):
        v = np.asarray(values, dtype=float)
        q1, q2, q3 = (float(np.quantile(v, q)) for q in (0.25, 0.5, 0.75))
        cx = 80 + i * width_per + width_per / 2
        bw = 46
        color = CLUSTER_COLORS[i % len(CLUSTER_COLORS)]
        parts += [
            f'<line x1="{cx}" y1="{py(v.min()):.1f}" x2="{cx}" y2="{py(v.max()):.1f}" stroke="#555"/>',
            f'<rect x="{cx - bw / 2}" y="{py(q3):.1f}" width="{bw}" '
            f'height="{max(py(q1) - py(q3), 0.5):.1f}" fill="{color}" fill-opacity="0.5" stroke="#333"/>',
            f'<line x1="{cx - bw / 2}" y1="{py(q2):.1f}" x2="{cx + bw / 2}" y2="{py(q2):.1f}" '
            f'stroke="#000" stroke-width="1.5"/>',
            f'<text x="{cx}" y="{height - 18}" text-anchor="middle">{_esc(name)}</text>',
        ]
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

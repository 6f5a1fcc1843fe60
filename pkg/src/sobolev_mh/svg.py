"""Small self-contained SVG line-chart writer (no rendering dependencies)."""

import math

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_W, _H = 600, 240
_ML, _MR, _MT, _MB = 46, 10, 10, 26


def _fmt(v):
    return f"{v:.6g}"


def _path(xs, ys, xmap, ymap):
    pts = []
    for x, y in zip(xs, ys):
        if not (math.isfinite(x) and math.isfinite(y)):
            continue
        pts.append(f"{xmap(x):.2f},{ymap(y):.2f}")
    return " ".join(pts)


def line_chart(series, title=""):
    """Render [(label, xs, ys), ...] as an SVG document string."""
    if not series:
        raise ValueError("nothing to plot")
    xs_all = [x for _, xs, _ in series for x in xs]
    ys_all = [y for _, _, ys in series for y in ys if math.isfinite(y)]
    x0, x1 = min(xs_all), max(xs_all)
    y0, y1 = min(ys_all), max(ys_all)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0
    pad = 0.05 * (y1 - y0)
    y0 -= pad
    y1 += pad
    iw = _W - _ML - _MR
    ih = _H - _MT - _MB

    def xmap(x):
        return _ML + (x - x0) / (x1 - x0) * iw

    def ymap(y):
        return _MT + (y1 - y) / (y1 - y0) * ih

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" '
        f'width="{_W}" height="{_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{iw}" height="{ih}" fill="none" '
        f'stroke="#444" stroke-width="1"/>',
    ]
    if y0 < 0.0 < y1:
        zy = ymap(0.0)
        parts.append(f'<line x1="{_ML}" y1="{zy:.2f}" x2="{_ML + iw}" y2="{zy:.2f}" '
                     f'stroke="#bbb" stroke-width="0.7" stroke-dasharray="3 3"/>')
    for lab, xv in ((_fmt(x0), _ML), (_fmt(x1), _ML + iw)):
        parts.append(f'<text x="{xv}" y="{_H - 8}" font-size="10" '
                     f'text-anchor="middle" fill="#333">{lab}</text>')
    for lab, yv in ((_fmt(y0), _MT + ih), (_fmt(y1), _MT + 8)):
        parts.append(f'<text x="{_ML - 4}" y="{yv}" font-size="10" '
                     f'text-anchor="end" fill="#333">{lab}</text>')
    for k, (label, xs, ys) in enumerate(series):
        color = _PALETTE[k % len(_PALETTE)]
        parts.append(f'<polyline points="{_path(xs, ys, xmap, ymap)}" fill="none" '
                     f'stroke="{color}" stroke-width="1.3"/>')
        ly = _MT + 14 + 13 * k
        lx = _W - _MR - 120
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 18}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 22}" y="{ly}" font-size="10" '
                     f'fill="#222">{label}</text>')
    if title:
        parts.append(f'<text x="{_ML + 4}" y="{_MT + 13}" font-size="11" '
                     f'fill="#222">{title}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""
SVG drawings of tangles.

Element ``i`` at time ``t`` is drawn at ``(i - 1/2, t - 1/2)`` in cell units,
with time running down the page, so a swap at ``(x, t)`` is the diamond
centred on ``(x, t)`` where two paths cross.  Output is plain text built
from fixed-precision numbers, hence byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .tangle import Tangle, corners

__all__ = ["RenderOptions", "to_svg", "PALETTE"]

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


@dataclass(frozen=True)
class RenderOptions:
    cell: float = 24.0
    shading: bool = True
    paths: bool = True
    corners: bool = False
    cluster_links: bool = False
    color_seed: int = 0

    def __post_init__(self):
        if not self.cell > 0:
            raise ValueError(f"cell size must be positive, got {self.cell}")


def _num(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def to_svg(T: Tangle, opts: RenderOptions = RenderOptions()) -> str:
    """Render ``T`` as an SVG 1.1 document.

    Paths include the padding rows above and below the tangle, so each
    polyline has ``depth + 3`` vertices.
    """
    c = opts.cell
    n = T.width
    traj = T.trajectories
    rows = traj.shape[0]
    t0 = T.t_min - 1                          # time of trajectory row 0

    def X(x: float) -> str:
        return _num(c * (x + 1))

    def Y(t: float) -> str:
        return _num(c * (t - t0 + 1))

    width = c * (n + 1)
    height = c * (rows + 1)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<rect x="0" y="0" width="{_num(width)}" height="{_num(height)}" fill="white"/>',
    ]

    if opts.shading and len(T):
        out.append('<g id="swaps" fill="#d0d0d0" stroke="none">')
        for x, t in zip(T.xs.tolist(), T.ts.tolist()):
            pts = ((x, t - 0.5), (x + 0.5, t), (x, t + 0.5), (x - 0.5, t))
            out.append(f'<polygon points="{" ".join(f"{X(a)},{Y(b)}" for a, b in pts)}"/>')
        out.append('</g>')

    if opts.paths:
        out.append(f'<g id="paths" fill="none" stroke-width="{_num(c / 8)}" stroke-linejoin="round">')
        for e in range(1, n + 1):
            color = PALETTE[(e - 1 + opts.color_seed) % len(PALETTE)]
            col = traj[:, e - 1].tolist()
            pts = " ".join(f"{X(p - 0.5)},{Y(t0 + k - 0.5)}" for k, p in enumerate(col))
            out.append(f'<polyline data-element="{e}" stroke={quoteattr(color)} points="{pts}"/>')
        out.append('</g>')

    if (opts.corners or opts.cluster_links) and len(T):
        found, _ = corners(T)
        if opts.cluster_links:
            out.append(f'<g id="cluster-links" stroke="#444444" stroke-width="{_num(c / 16)}">')
            spots = sorted({(a.x, a.y) for a in found}, key=lambda p: (p[1], p[0]))
            where = set(spots)
            for x, y in spots:
                # each link once: to the right, and to the three spots in the next row
                for dx, dy in ((1, 0), (-1, 1), (0, 1), (1, 1)):
                    if (x + dx, y + dy) in where:
                        out.append(f'<line x1="{X(x)}" y1="{Y(y)}" x2="{X(x + dx)}" y2="{Y(y + dy)}"/>')
            out.append('</g>')
        if opts.corners:
            out.append('<g id="corners" fill="none" stroke="black">')
            for a in found:
                r = c * (0.18 if a.multiplicity == 1 else 0.28)
                out.append(f'<circle cx="{X(a.x)}" cy="{Y(a.y)}" r="{_num(r)}" data-weight="{a.multiplicity}"/>')
            out.append('</g>')

    out.append('</svg>')
    return "\n".join(out) + "\n"

"""SVG drawings of the complex Sigma for rank-2 data."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .chains import Chain, PolysimplicialComplex, Polysimplex
from .errors import AlcoveError
from .linalg import dot

SIZE = 480
MARGIN = 10


def hyperplanes_in_window(cplx: PolysimplicialComplex, lo, hi) -> list[tuple[tuple[int, ...], int]]:
    """(coroot, k) with <x, coroot> = k meeting the open square (lo, hi)^2."""
    out = []
    corners = [(lo, lo), (lo, hi), (hi, lo), (hi, hi)]
    for c in cplx.datum.positive_coroots:
        vals = [dot(p, c) for p in corners]
        for k in range(floor(min(vals)), ceil(max(vals)) + 1):
            if min(vals) < k < max(vals):
                out.append((c, k))
    return out


def _segment(c, k, lo, hi):
    """Endpoints of the line <x, c> = k clipped to the square [lo, hi]^2."""
    a, b = c
    pts = []
    for x in (lo, hi):
        if b:
            y = Fraction(k - a * x, b)
            if lo <= y <= hi:
                pts.append((Fraction(x), y))
    for y in (lo, hi):
        if a:
            x = Fraction(k - b * y, a)
            if lo <= x <= hi:
                pts.append((x, Fraction(y)))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


def emit_svg(cplx: PolysimplicialComplex, window: Sequence = (-3, 3),
             overlays: Sequence[Chain | Sequence[Polysimplex]] = ()) -> str:
    """Hyperplanes in the window, the fundamental alcove, and shaded overlays."""
    if cplx.datum.rank != 2:
        raise AlcoveError("rank-not-2", "drawings are only produced for rank 2")
    lo, hi = Fraction(window[0]), Fraction(window[1])
    scale = Fraction(SIZE - 2 * MARGIN) / (hi - lo)

    def coords(p):
        x = MARGIN + (Fraction(p[0]) - lo) * scale
        y = MARGIN + (hi - Fraction(p[1])) * scale
        return f"{float(x):.3f}", f"{float(y):.3f}"

    def xy(p):
        return ",".join(coords(p))

    def polygon(cell: Polysimplex, style: str) -> str:
        verts = list(cell.vertices)
        if len(verts) > 2:
            cx = sum(v[0] for v in verts) / len(verts)
            cy = sum(v[1] for v in verts) / len(verts)
            # order the vertices around the barycenter by quadrant and slope
            def angle_key(v):
                dx, dy = v[0] - cx, v[1] - cy
                half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
                return (half, -dx / (abs(dx) + abs(dy)) if half == 0 else dx / (abs(dx) + abs(dy)))
            verts.sort(key=angle_key)
        pts = " ".join(xy(v) for v in verts)
        tag = "polygon" if len(verts) > 2 else "polyline"
        return f'<{tag} points="{pts}" {style}/>'

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
             f'viewBox="0 0 {SIZE} {SIZE}">',
             f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>']
    planes = hyperplanes_in_window(cplx, lo, hi)
    lines.append(f"<!-- {len(planes)} hyperplanes -->")
    for c, k in planes:
        seg = _segment(c, k, lo, hi)
        if seg:
            (x1, y1), (x2, y2) = coords(seg[0]), coords(seg[1])
            width = "1.5" if k == 0 else "0.6"
            lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{width}"/>')
    lines.append(polygon(cplx.fundamental_alcove, 'fill="#9ecae1" stroke="none" fill-opacity="0.8"'))
    colors = ("#fdae6b", "#a1d99b", "#bcbddc", "#fc9272")
    for i, ov in enumerate(overlays):
        cells = ov.support if isinstance(ov, Chain) else list(ov)
        color = colors[i % len(colors)]
        for cell in cells:
            if cell.dim == 2:
                lines.append(polygon(cell, f'fill="{color}" stroke="{color}" fill-opacity="0.6"'))
            else:
                lines.append(polygon(cell, f'fill="none" stroke="{color}" stroke-width="3"'))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

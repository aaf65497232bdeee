"""Deterministic SVG output for drawings (write-only)."""

from __future__ import annotations

from .repgraph import Drawing

UNIT = 32  # pixels per grid unit
MARGIN = 16
VERTEX = 4  # side of the square marking a vertex


def render_svg(drawing: Drawing, title: str | None = None) -> str:
    x0, y1 = min(drawing.x), max(drawing.y)
    width = drawing.width * UNIT + 2 * MARGIN
    height = drawing.height * UNIT + 2 * MARGIN

    def px(v: int) -> tuple[int, int]:
        # flip y so that north points up on screen
        return (drawing.x[v] - x0) * UNIT + MARGIN, (y1 - drawing.y[v]) * UNIT + MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if title:
        out.append(f"  <title>{_escape(title)}</title>")
    out.append('  <g stroke="black" stroke-width="1.5" stroke-linecap="square">')
    for e in drawing.rep.edges:
        (ax, ay), (bx, by) = px(e.u), px(e.v)
        out.append(f'    <line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("  </g>")
    out.append('  <g fill="black">')
    h = VERTEX // 2
    for v in range(drawing.rep.n):
        cx, cy = px(v)
        out.append(f'    <rect id="v{v}" x="{cx - h}" y="{cy - h}" width="{VERTEX}" height="{VERTEX}"/>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")

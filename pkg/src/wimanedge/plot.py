"""Real pictures of pencil members in the chart z = 1, drawn as SVG.

This is the only place floats appear: exact coefficients are converted once,
the form is sampled on a grid and the zero set is traced by marching squares.
Members with non-real coefficients get the zero sets of their real and
imaginary parts in two colours; the real points of the curve lie on both.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactfield import FieldElement, get_field, nf_embed
from .pencil import FUNDAMENTAL_POINTS, PencilParam, member

PLOT_FIELD = "Q(zeta15)"
_MU = re.compile(r"^\s*([+-]?(?:\d+(?:/\d+)?)?)\s*\*?\s*(sqrt5|sqrtm3)?\s*$")


@dataclass(frozen=True)
class PlotSpec:
    lam: FieldElement
    mu: FieldElement
    window: tuple
    grid: int
    out: str

    def __post_init__(self):
        xmin, xmax, ymin, ymax = self.window
        if not (xmin < xmax and ymin < ymax):
            raise ValueError(f"degenerate window {self.window}")
        if self.grid < 16:
            raise ValueError("grid resolution must be at least 16")


def parse_value(text: str) -> FieldElement:
    """A rational such as "-3/2", or k*sqrt5 / k*sqrtm3 with rational k."""
    field = get_field(PLOT_FIELD)
    text = text.strip()
    try:
        return field(Fraction(text))
    except ValueError:
        pass
    m = _MU.match(text)
    if not m or not m.group(2):
        raise ValueError(f"cannot read {text!r}: use a rational or k*sqrt5 / k*sqrtm3")
    k = m.group(1)
    k = Fraction(k + "1" if k in ("", "+", "-") else k)
    return nf_embed(m.group(2), field) * k


def parse_window(text: str) -> tuple:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 4:
        raise ValueError("window needs four numbers xmin,xmax,ymin,ymax")
    return tuple(parts)


def _chart_terms(form):
    return [(e[0], e[1], c.to_complex()) for e, c in form.terms.items()]


def sample(spec: PlotSpec):
    form = member(PencilParam(spec.lam, spec.mu)).form
    xmin, xmax, ymin, ymax = spec.window
    xs = np.linspace(xmin, xmax, spec.grid + 1)
    ys = np.linspace(ymin, ymax, spec.grid + 1)
    X, Y = np.meshgrid(xs, ys)
    V = np.zeros_like(X, dtype=complex)
    for i, j, c in _chart_terms(form):
        V += c * X ** i * Y ** j
    return xs, ys, V


def marching_squares(xs, ys, V) -> list[tuple]:
    """Line segments approximating V = 0 on the grid (cells indexed [row=y, col=x])."""
    segs = []

    def cross(p, q, vp, vq):
        t = vp / (vp - vq)
        return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))

    for r in range(len(ys) - 1):
        for c in range(len(xs) - 1):
            corners = [(xs[c], ys[r]), (xs[c + 1], ys[r]), (xs[c + 1], ys[r + 1]), (xs[c], ys[r + 1])]
            vals = [V[r, c], V[r, c + 1], V[r + 1, c + 1], V[r + 1, c]]
            pts = []
            for k in range(4):
                a, b = vals[k], vals[(k + 1) % 4]
                if (a < 0) != (b < 0) and a != b:
                    pts.append(cross(corners[k], corners[(k + 1) % 4], a, b))
            if len(pts) == 2:
                segs.append((pts[0], pts[1]))
            elif len(pts) == 4:
                centre = sum(vals) / 4
                if (centre < 0) == (vals[0] < 0):
                    segs += [(pts[0], pts[3]), (pts[1], pts[2])]
                else:
                    segs += [(pts[0], pts[1]), (pts[2], pts[3])]
    return segs


@dataclass
class PlotResult:
    path: str
    segments: dict
    marked: list


def render(spec: PlotSpec) -> PlotResult:
    xs, ys, V = sample(spec)
    parts = {"real": marching_squares(xs, ys, V.real)}
    if np.max(np.abs(V.imag)) > 1e-9 * max(1.0, float(np.max(np.abs(V.real)))):
        parts["imag"] = marching_squares(xs, ys, V.imag)
    xmin, xmax, ymin, ymax = spec.window
    size = 600
    sx, sy = size / (xmax - xmin), size / (ymax - ymin)

    def tx(p):
        return (p[0] - xmin) * sx, (ymax - p[1]) * sy

    colours = {"real": "#1f3a93", "imag": "#c0392b"}
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="white"/>']
    for key, segs in parts.items():
        d = " ".join("M%.2f,%.2f L%.2f,%.2f" % (*tx(a), *tx(b)) for a, b in segs)
        lines.append(f'<path d="{d}" stroke="{colours[key]}" stroke-width="1.2" fill="none"/>')
    marked = []
    for x, y, z in FUNDAMENTAL_POINTS:
        px, py = x / z, y / z
        marked.append((px, py))
        if xmin <= px <= xmax and ymin <= py <= ymax:
            cx, cy = tx((px, py))
            lines.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="black"/>')
    lines.append("</svg>")
    with open(spec.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return PlotResult(spec.out, {k: len(v) for k, v in parts.items()}, marked)

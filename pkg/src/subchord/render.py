"""Schematic chord diagrams as static SVG 1.1 documents.

The 2n word positions are ticks spaced evenly around a circle, starting at
the top and running clockwise; each label becomes a straight chord between
its two ticks.  Below the circle the five named counts are printed.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from subchord.pattern import count_named
from subchord.word import GaussWord, chords_cross

SIZE = 320
RADIUS = 120
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _point(k: int, L: int, r: float) -> tuple[float, float]:
    t = 2 * math.pi * k / L - math.pi / 2
    c = SIZE / 2
    return round(c + r * math.cos(t), 2), round(c + r * math.sin(t), 2)


def chord_svg(w: GaussWord, title: str | None = None) -> str:
    c = count_named(w)
    L = len(w.letters)
    cx = cy = SIZE / 2
    height = SIZE + 40
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{height}" viewBox="0 0 {SIZE} {height}">',
        f"<title>{escape(title or str(w) or 'simple closed curve')}</title>",
        f'<circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    pos = w.positions()
    for i, a in enumerate(w.labels()):
        p, q = pos[a]
        x1, y1 = _point(p, L, RADIUS)
        x2, y2 = _point(q, L, RADIUS)
        # chords crossing nothing are drawn dashed, they are nugatory
        lonely = not any(chords_cross(pos[a], pos[b]) for b in pos if b != a)
        dash = ' stroke-dasharray="4 3"' if lonely else ""
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="2"{dash}/>'
        )
    for k, a in enumerate(w.letters):
        x1, y1 = _point(k, L, RADIUS - 5)
        x2, y2 = _point(k, L, RADIUS + 5)
        tx, ty = _point(k, L, RADIUS + 17)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
        out.append(
            f'<text x="{tx}" y="{ty}" font-family="sans-serif" font-size="11" '
            f'text-anchor="middle" dominant-baseline="middle">{a}</text>'
        )
    note = f"cross {c.cross}  triple {c.triple}  h {c.h}  iii {c.iii}  hh {c.hh}"
    out.append(
        f'<text x="{cx}" y="{SIZE + 20}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle">{note}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"

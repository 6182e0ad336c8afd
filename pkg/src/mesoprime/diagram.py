"""Pictures of congruences on N or N^2: dots, generator-shift edges, nil marked."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from string import ascii_lowercase

from .congruence import Congruence, congruence_ideal
from .errors import DimensionUnsupported

NIL_MARK = "∞"


@dataclass
class Diagram:
    names: tuple
    bound: int
    points: list
    nil: set
    labels: dict
    edges: list

    def edge_set(self):
        return {frozenset(e) for e in self.edges}


def _source(C):
    return C.source if isinstance(C, Congruence) else C


def diagram(C, D=5) -> Diagram:
    """Grid picture of the congruence of C on {0..D}^n for n <= 2.

    Edges join the two ends of a shifted two-term input generator when both
    lie in the grid and are not nil; connectivity then shows the classes.
    Classes and nil come from the unital congruence ideal.
    """
    I = _source(C)
    n = I.ring.n
    if n > 2:
        raise DimensionUnsupported(f"diagrams need one or two variables, not {n}")
    U = congruence_ideal(I) if not I.is_unit else I
    pts = list(product(range(D + 1), repeat=n))
    nil = {p for p in pts if U.contains_monomial(p)}
    labels = {}
    order = {}
    for p in sorted(pts, key=lambda p: (sum(p), tuple(reversed(p)))):
        if p in nil:
            labels[p] = NIL_MARK
            continue
        key = U.nf_exp(p)[1]
        if key not in order:
            order[key] = _label(len(order))
        labels[p] = order[key]
    edges = []
    for g in I.gens:
        if g.trail is None:
            continue
        for u in pts:
            a = tuple(x + y for x, y in zip(g.lead, u))
            b = tuple(x + y for x, y in zip(g.trail, u))
            if max(a) > D or max(b) > D or a in nil or b in nil:
                continue
            e = tuple(sorted((a, b)))
            if e not in edges:
                edges.append(e)
    edges.sort()
    return Diagram(I.ring.names, D, pts, nil, labels, edges)


def _label(k):
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = ascii_lowercase[r] + s
    return s


def render_text(dg: Diagram) -> str:
    """Class labels on the grid (y up), followed by the edge list."""
    width = max(len(v) for v in dg.labels.values())
    lines = []
    if len(dg.names) == 1:
        lines.append(" ".join(dg.labels[(x,)].rjust(width) for x in range(dg.bound + 1)))
    else:
        for y in range(dg.bound, -1, -1):
            row = " ".join(dg.labels[(x, y)].rjust(width) for x in range(dg.bound + 1))
            lines.append(f"{y:>3} | {row}")
        lines.append("    +" + "-" * (len(lines[0]) - 5))
    lines.append("edges:")
    for a, b in dg.edges:
        lines.append(f"  {a} -- {b}")
    return "\n".join(lines) + "\n"


def render_svg(dg: Diagram, step=40) -> str:
    n = len(dg.names)
    D = dg.bound
    pad = step
    W = pad * 2 + step * D
    H = pad * 2 + (step * D if n == 2 else 0)

    def xy(p):
        x = pad + step * p[0]
        y = H - pad - (step * p[1] if n == 2 else 0)
        return x, y

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
           f'viewBox="0 0 {W} {H}">',
           f'<rect width="{W}" height="{H}" fill="white"/>']
    nil_pts = sorted(dg.nil)
    for p in nil_pts:
        x, y = xy(p)
        h = step / 2
        out.append(f'<rect x="{x - h}" y="{y - h}" width="{step}" height="{step}" '
                   f'fill="#dddddd"/>')
    for a, b in dg.edges:
        (x1, y1), (x2, y2) = xy(a), xy(b)
        if abs(x1 - x2) + abs(y1 - y2) > step * 1.01 and (x1 == x2 or y1 == y2):
            # bend collinear long edges so they do not run through dots
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            if y1 == y2:
                my -= step / 3
            else:
                mx += step / 3
            out.append(f'<path d="M {x1} {y1} Q {mx} {my} {x2} {y2}" '
                       f'fill="none" stroke="black"/>')
        else:
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
    for p in dg.points:
        x, y = xy(p)
        if p in dg.nil:
            out.append(f'<text x="{x}" y="{y + 4}" font-size="12" text-anchor="middle">'
                       f'{NIL_MARK}</text>')
        else:
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

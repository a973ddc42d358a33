"""Independent reference implementations used to check the library.

None of these import the code they check beyond plain data types.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


# ---------------------------------------------------------------- circle

def strictly_inside(a, b, x):
    """x on the open ccw arc from a to b, by brute force on [0, 1)."""
    if a < b:
        return a < x < b
    return x > a or x < b


def cross_oracle(p, q):
    """Two chords cross iff exactly one endpoint of q lies in each open arc of p."""
    (a, b), (c, d) = p, q
    if len({a, b, c, d}) < 4:
        return False
    n1 = sum(strictly_inside(a, b, x) for x in (c, d))
    n2 = sum(strictly_inside(b, a, x) for x in (c, d))
    return n1 == 1 and n2 == 1


def random_point(rng, den=97):
    return Fraction(rng.randrange(den * 7), den * 7)


# ---------------------------------------------------------------- faces

def traced_faces(chords):
    """Faces of the disc by half-edge tracing on the chord-and-circle graph.

    Returns a list of frozensets of chords, one per inner face. Vertices are
    the chord endpoints; around a vertex v the edges are ordered by the ccw
    distance from v to their far end (the rotation at v).
    """
    chords = [(Fraction(a), Fraction(b)) for a, b in chords]
    if not chords:
        return [frozenset()]
    vs = sorted({x for c in chords for x in c})
    n = len(vs)
    nxt = {vs[i]: vs[(i + 1) % n] for i in range(n)}
    prv = {vs[i]: vs[i - 1] for i in range(n)}

    def dist(v, w):
        return (w - v) % 1

    # Half-edge: (v, w, tag). Circle edges carry tag "arc", chords their index.
    rot = {}
    for v in vs:
        out = [(dist(v, nxt[v]), 0, (v, nxt[v], "arc+")),
               (dist(v, prv[v]) or Fraction(1), 2, (v, prv[v], "arc-"))]
        for i, (a, b) in enumerate(chords):
            if v in (a, b):
                w = b if v == a else a
                out.append((dist(v, w), 1, (v, w, i)))
        out.sort()
        rot[v] = [h for _, _, h in out]

    def twin(h):
        v, w, t = h
        if t == "arc+":
            return (w, v, "arc-")
        if t == "arc-":
            return (w, v, "arc+")
        return (w, v, t)

    def nxt_half(h):
        # Arrive at w along h, leave by the edge just before the twin in the
        # rotation at w.
        t = twin(h)
        r = rot[t[0]]
        return r[(r.index(t) - 1) % len(r)]

    seen, out = set(), []
    for v in vs:
        for h in rot[v]:
            if h in seen:
                continue
            cyc = []
            while h not in seen:
                seen.add(h)
                cyc.append(h)
                h = nxt_half(h)
            out.append(cyc)
    # The outer face runs along the circle clockwise only.
    inner = [c for c in out if not all(h[2] == "arc-" for h in c)]
    return [frozenset(chords[h[2]] for h in c if not isinstance(h[2], str)) for c in inner]


def all_noncrossing_on_grid(grid, max_chords):
    """Every non-crossing system of at most max_chords chords on grid points.

    Chords may share endpoints. Enumerated by adding chords in increasing
    order, checking crossings with the interleaving oracle.
    """
    pts = [Fraction(i, grid) for i in range(grid)]
    cands = list(itertools.combinations(pts, 2))
    compat = {i: {j for j in range(len(cands)) if not cross_oracle(cands[i], cands[j])}
              for i in range(len(cands))}

    def rec(start, chosen):
        yield chosen
        if len(chosen) == max_chords:
            return
        for j in range(start, len(cands)):
            if all(j in compat[i] for i in chosen):
                yield from rec(j + 1, chosen + [j])

    for sel in rec(0, []):
        yield [cands[i] for i in sel]


# ---------------------------------------------------------------- presentations

def reachability_components(p, removed):
    """Connected components after removing points, on an explicit graph.

    Each edge is a path port0 - samples - port1 (open ends become fresh
    nodes); a switch is a hub joined to its trunk port and to its member
    points; a member with a port is joined to it.
    """
    g = nx.Graph()
    removed = set(removed)
    for e in p.edges:
        ends = [("port", q) if q is not None else ("open", e.id, j) for j, q in enumerate(e.ports)]
        chain = [ends[0]] + [("pt", x) for x in e.samples] + [ends[1]]
        # Interior segments become nodes so that removing samples splits them.
        nodes = []
        for j, node in enumerate(chain):
            nodes.append(node)
            if j < len(chain) - 1:
                nodes.append(("seg", e.id, j))
        for u in nodes:
            if u[0] == "pt" and u[1] in removed:
                continue
            g.add_node(u)
        for u, v in zip(nodes, nodes[1:]):
            if u in g and v in g:
                g.add_edge(u, v)
    for s in p.switches:
        hub = ("hub", s.id)
        g.add_edge(hub, ("port", s.trunk))
        for x, q in s.branches:
            if x in removed:
                continue
            g.add_edge(hub, ("pt", x))
            if q is not None:
                g.add_edge(("pt", x), ("port", q))
    return nx.number_connected_components(g)


# ---------------------------------------------------------------- cantor

def ternary_in_cantor(x):
    """Base-3 digits by long division with cycle detection.

    x is in C iff some expansion avoids the digit 1: either none of its
    digits is 1, or the first 1 is the last nonzero digit (1000... = 0222...).
    """
    x = Fraction(x)
    if x == 1:
        return True
    num, den = x.numerator, x.denominator
    seen = set()
    digits = []
    while num and num not in seen:
        seen.add(num)
        num *= 3
        digits.append(num // den)
        num %= den
    terminating = num == 0
    if 1 not in digits:
        return True
    i = digits.index(1)
    return terminating and i == len(digits) - 1


def nesting_in_cantor(x, depth=60):
    """Stay inside a kept third for `depth` levels."""
    x = Fraction(x)
    lo, hi = Fraction(0), Fraction(1)
    for _ in range(depth):
        w = (hi - lo) / 3
        if lo <= x <= lo + w:
            hi = lo + w
        elif hi - w <= x <= hi:
            lo = hi - w
        else:
            return False
    return True


def subtraction_gaps(r, window, depth):
    """Slice gaps by subtracting depth-`depth` approximants of the copies.

    Works in integer units of 3^-depth. Returns (lo, hi) Fractions of the
    complement components meeting the window, in order.
    """
    r = Fraction(r)
    q = r.denominator
    lo, hi = (Fraction(v) for v in window)
    unit = 3 ** depth
    # Depth-d intervals of C as integer offsets.
    ivs = [(0, unit)]
    for _ in range(depth):
        w = (ivs[0][1] - ivs[0][0]) // 3
        ivs = [iv for a, b in ivs for iv in ((a, a + w), (b - w, b))]
    n_lo = int(lo) // 2 - 2
    n_hi = int(hi) // 2 + 2
    blocks = []
    for n in range(n_lo, n_hi + 1):
        if abs(n) >= q:
            base = 2 * n * unit
            blocks.extend((base + a, base + b) for a, b in ivs)
    blocks.sort()
    out = []
    for (a1, b1), (a2, b2) in zip(blocks, blocks[1:]):
        if b1 < a2:
            g = (Fraction(b1, unit), Fraction(a2, unit))
            if g[0] < hi and g[1] > lo:
                out.append(g)
    return out


def random_rationals(rng, count, max_den=200):
    out = []
    for _ in range(count):
        d = rng.randint(1, max_den)
        out.append(Fraction(rng.randint(0, d), d))
    return out


def random_matching(rng, n, den=None):
    """Exactly n non-crossing chords on 2n distinct points of a grid."""
    den = den or 4 * n + 8
    pts = sorted(rng.sample(range(den), 2 * n))
    out = []
    todo = [pts]
    while todo:
        seg = todo.pop()
        if not seg:
            continue
        k = rng.randrange(len(seg) // 2) * 2 + 1
        out.append((Fraction(seg[0], den), Fraction(seg[k], den)))
        todo.append(seg[1:k])
        todo.append(seg[k + 1:])
    return out


def noncrossing_matchings(grid):
    """Every non-crossing partial matching of grid points 0..grid-1, as index pairs."""
    cur = []

    def rec(x, opens):
        if len(opens) > grid - x:
            return
        if x == grid:
            yield list(cur)
            return
        yield from rec(x + 1, opens)
        yield from rec(x + 1, opens + (x,))
        if opens:
            cur.append((opens[-1], x))
            yield from rec(x + 1, opens[:-1])
            cur.pop()

    yield from rec(0, ())

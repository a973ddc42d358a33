"""Deterministic generators of annotated laminations, and mutators.

Every face is filled the same way. A face bounded by a chord either carries
nested filler leaves (a chain of thin strips ending in a short arc-gap),
or a shell, or a star. Free arcs are cut into 2N+1 equal pieces, and the
fillers join symmetric cut points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circle import Chord, minor_arc_gap, point
from .errors import DomainError, NotApplicable
from .lamination import (IN, OUT, AnnotatedLamination, Decomposition, FiniteLamination,
                         RawAnnotatedLamination, ShellSpec, StarSpec, other_side)

FAMILIES = ("prong", "shell-family", "regular", "trivial", "random")


@dataclass(frozen=True)
class CorpusSpec:
    family: str
    seed: int = 0
    resolution: Fraction = Fraction(1, 16)
    k: int = 3
    m: int = 2

    def __post_init__(self):
        object.__setattr__(self, "resolution", Fraction(self.resolution))
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family}")
        if not 0 < self.resolution <= Fraction(1, 8):
            raise DomainError("resolution must lie in (0, 1/8]")
        if self.k < 3:
            raise DomainError("k must be at least 3")
        if self.m < 2:
            raise DomainError("m must be at least 2")


def _chord(a, L):
    return Chord(point(a), point(a + L))


def _sort_boundary(root, chords):
    s = ShellSpec(root, tuple(chords))
    return tuple(sorted(chords, key=s.first_endpoint_key))


class _Gen:
    def __init__(self, eps, rng=None, raw=False):
        self.eps = Fraction(eps)
        self.rng = rng or random.Random(0)
        self.raw = raw
        self.leaves = set()
        self.shells = []
        self.stars = []
        self.virtual = set()
        self.switches = 0
        self.bare = 0  # raw regions emitted without any virtual component

    def strips(self, a, L, extra=0, limit=None):
        """Nested fillers inside the arc (a, a+L), spaced below `limit`."""
        limit = self.eps if limit is None else limit
        n = 0
        while L / (2 * n + 1) >= limit:
            n += 1
        n += extra
        h = L / (2 * n + 1)
        for i in range(1, n + 1):
            self.leaves.add(_chord(a + i * h, L - 2 * i * h))
        return n

    def shell(self, a, L, widths, root_at, outer: Optional[Chord], fills, virtual_extra=()):
        """Children side by side in (a, a+L), separated by gaps < eps."""
        m = len(widths)
        g = (L - sum(widths)) / (m + 1 if outer is not None else m)
        assert g > 0 and g < self.eps, (g, self.eps)
        pos = a + (g if outer is not None else 0)
        kids = []
        for i, w in enumerate(widths):
            c = _chord(pos, w)
            kids.append(c)
            if i == root_at or i in virtual_extra:
                # Root endpoints are not leaf endpoints: keep gap plus
                # filler spacing below eps.
                self.strips(pos, w, fills[i] if isinstance(fills[i], int) else 0,
                            self.eps - g)
            else:
                fill = fills[i]
                if callable(fill):
                    fill(pos, w)
                else:
                    self.strips(pos, w, fill)
            pos += w + g
        root = kids[root_at]
        others = [c for i, c in enumerate(kids) if i != root_at]
        if outer is not None:
            others.append(outer)
        if self.raw:
            self.virtual.add(root)
            for i in virtual_extra:
                self.virtual.add(kids[i])
            for i, c in enumerate(kids):
                if i != root_at and i not in virtual_extra:
                    self.leaves.add(c)
        else:
            for c in others:
                self.leaves.add(c)
            self.shells.append(ShellSpec(root, _sort_boundary(root, others)))
        self.switches += 1
        return kids

    def bare_region(self, a, L, widths, outer, fills):
        """Raw region whose boundary is all leaves (completion counterexample)."""
        m = len(widths)
        g = (L - sum(widths)) / (m + 1 if outer is not None else m)
        pos = a + (g if outer is not None else 0)
        for i, w in enumerate(widths):
            self.leaves.add(_chord(pos, w))
            self.strips(pos, w, fills[i])
            pos += w + g
        self.bare += 1

    def star(self, a, L, widths, outer: Optional[Chord], fills):
        """Polygon with vertices a, a+w1, ..., closing with `outer`."""
        kids = []
        pos = a
        for i, w in enumerate(widths):
            c = _chord(pos, w)
            kids.append(c)
            self.leaves.add(c)
            fill = fills[i]
            if callable(fill):
                fill(pos, w)
            else:
                self.strips(pos, w, fill)
                self.switches += 1
            pos += w
        poly = kids + ([outer] if outer is not None else [])
        self.stars.append(StarSpec(tuple(poly)))
        return kids

    def result(self, exceptions=0):
        base = FiniteLamination(tuple(self.leaves))
        if self.raw:
            return RawAnnotatedLamination(base, (), tuple(self.stars), exceptions, self.eps,
                                          tuple(self.virtual))
        return AnnotatedLamination(base, tuple(self.shells), tuple(self.stars), exceptions,
                                   self.eps)


# ---------------------------------------------------------------- families

def gen_prong(k: int, resolution=Fraction(1, 16), seed: int = 0) -> AnnotatedLamination:
    """Star on the vertices j/k with filler leaves in every face.

    Filler counts differ from face to face (shifted by `seed`) so the
    result has no rotational symmetry.
    """
    if k < 3:
        raise DomainError("a prong needs k >= 3")
    g = _Gen(resolution)
    g.star(Fraction(0), Fraction(1), [Fraction(1, k)] * k, None,
           [(j + seed) % k for j in range(k)])
    return g.result()


def gen_shell_family(m: int, resolution=Fraction(1, 16), seed: int = 0) -> AnnotatedLamination:
    """One shell: a long root and m shorter boundary leaves around the circle."""
    if m < 2:
        raise DomainError("a shell family needs m >= 2")
    eps = Fraction(resolution)
    g = _Gen(eps)
    gap = eps / 2
    root_w = Fraction(3, 8)
    rest = 1 - root_w - (m + 1) * gap
    weights = [m + 1 + ((i + seed) % m) for i in range(m)]
    widths = [root_w] + [rest * w / sum(weights) for w in weights]
    g.shell(Fraction(0), Fraction(1), widths, 0, None, [0] * (m + 1))
    return g.result()


def gen_trivial(resolution=Fraction(1, 16), seed: int = 0) -> AnnotatedLamination:
    """Parallel chords (x, -x): the trivial foliation by lines."""
    eps = Fraction(resolution)
    n = int(1 / eps) + 1 + seed % 3
    leaves = [Chord(Fraction(i, 2 * n), 1 - Fraction(i, 2 * n)) for i in range(1, n)]
    return AnnotatedLamination(FiniteLamination(tuple(leaves)), (), (), 0, eps)


def _regular_raw(resolution):
    eps = Fraction(resolution)
    g = _Gen(eps, raw=True)
    gap = eps / 2
    w1, w2 = Fraction(2, 5), Fraction(7, 20)
    w3 = 1 - w1 - w2 - 3 * gap
    g.shell(Fraction(0), Fraction(1), [w1, w2, w3], 0, None, [0, 2, 0], virtual_extra=(1,))
    return g.result()


def gen_regular_two_completions(resolution=Fraction(1, 16)):
    """A raw lamination and two completions with distinct roots in one region."""
    from .completion import complete
    eps = Fraction(resolution)
    if eps > Fraction(1, 8):
        raise DomainError("resolution must be at most 1/8")
    raw = _regular_raw(eps)
    first = complete(raw)
    (v1, v2) = sorted(raw.virtual, key=lambda c: -minor_arc_gap(c))
    s = first.shells[0]
    others = [c for c in s.boundary if c != v2] + [v1]
    second = AnnotatedLamination(
        FiniteLamination(tuple(c for c in first.leaves if c != v2) + (v1,)),
        (ShellSpec(v2, _sort_boundary(v2, others)),), (), raw.exceptions, eps)
    return raw, first, second


# ---------------------------------------------------------------- random

@dataclass
class RandomMeta:
    switches: int
    bare_regions: int


def gen_random(seed: int, resolution=Fraction(1, 64), max_switches: int = 20,
               max_degree: int = 5, raw: bool = False, bare: bool = False,
               star_weight: float = 0.35):
    """Random tree of shells and stars.

    With `raw`, shells become regions with virtual components (the largest
    one always virtual, so completion keeps a long root). With `bare`, one
    region keeps only leaves on its boundary.
    """
    rng = random.Random(seed)
    eps = Fraction(resolution)
    g = _Gen(eps, rng, raw=raw)
    want_bare = [bare]
    minw = 3 * eps

    def widths_for(avail, n, top=False):
        while True:
            ws = [rng.randint(2, 5) for _ in range(n)]
            out = [avail * w / sum(ws) for w in ws]
            if not top or max(out) < Fraction(1, 2):
                return out

    def fill(a, L, allow_star=True, depth=0):
        gap = eps / 2
        room_shell = L - 3 * gap - 2 * minw
        kinds = ["strips"] if depth else []
        if g.switches < max_switches - 1 and depth < 5:
            if room_shell > 0:
                kinds += ["shell", "shell"]
            if allow_star and L >= 2 * minw and g.switches < max_switches - 3:
                kinds += ["star"] if rng.random() < star_weight * 2 else []
        kind = rng.choice(kinds or ["strips"])
        outer = _chord(a, L)
        if kind == "strips":
            g.strips(a, L, rng.randint(0, 2))
            return
        if kind == "shell":
            n = rng.randint(2, 4)
            while n > 2 and L - (n + 1) * gap - n * minw <= 0:
                n -= 1
            ws = widths_for(L - (n + 1) * gap, n)
            root_at = max(range(n), key=lambda i: ws[i])
            fills = [rng.randint(0, 2) if i == root_at else
                     (lambda x, w, d=depth: fill(x, w, True, d + 1)) for i in range(n)]
            region(a, L, ws, root_at, outer, fills)
            return
        k = rng.randint(3, max_degree)
        while k > 3 and L < (k - 1) * minw:
            k -= 1
        ws = widths_for(L, k - 1)
        big = max(range(k - 1), key=lambda i: ws[i])
        ws[0], ws[big] = ws[big], ws[0]
        fills = [lambda x, w, d=depth: fill(x, w, False, d + 1) for _ in range(k - 1)]
        g.star(a, L, ws, outer, fills)

    def region(a, L, ws, root_at, outer, fills):
        if raw and want_bare[0] and rng.random() < 0.5:
            want_bare[0] = False
            g.bare_region(a, L, ws, outer, [0] * len(ws))
            return
        extra = ()
        if raw:
            extra = tuple(i for i in range(len(ws))
                          if i != root_at and not callable(fills[i]) and rng.random() < 0.5)
        g.shell(a, L, ws, root_at, outer, fills, virtual_extra=extra)

    top = rng.random()
    gap = eps / 2
    if top < 0.4:
        k = rng.randint(3, max_degree)
        ws = widths_for(Fraction(1), k, top=True)
        order = sorted(range(k), key=lambda i: -ws[i])
        i1 = order[0]
        # Put the two longest edges next to each other.
        ws[0], ws[i1] = ws[i1], ws[0]
        j = ws.index(sorted(ws, reverse=True)[1], 1)
        ws[1], ws[j] = ws[j], ws[1]
        fills = [lambda x, w: fill(x, w, False, 1) for _ in range(k)]
        g.star(Fraction(0), Fraction(1), ws, None, fills)
    else:
        n = rng.randint(3, 4)
        ws = widths_for(1 - n * gap, n, top=True)
        root_at = max(range(n), key=lambda i: ws[i])
        fills = [rng.randint(0, 2) if i == root_at else (lambda x, w: fill(x, w, True, 1))
                 for i in range(n)]
        region(Fraction(0), Fraction(1), ws, root_at, None, fills)
    if raw and want_bare[0]:
        # No region was sacrificed yet: force one at the top of a fresh copy.
        return gen_random(seed + 10 ** 6, resolution, max_switches, max_degree, raw, bare,
                          star_weight)
    return g.result(), RandomMeta(g.switches, g.bare)


# ---------------------------------------------------------------- mutators

MUTATIONS = {
    "share-star-edge": "star-uniqueness",
    "shrink-root": "no-bad-accumulation",
    "break-order": "few-common-ends",
    "drop-annotation": "coverage",
}


def _inside(c, side):
    """(start, length) of the arc of c on `side`."""
    return (c.a, c.b - c.a) if side == IN else (c.b, 1 - (c.b - c.a))


def _chords_within(chords, a, L):
    out = []
    for c in chords:
        da = (c.a - a) % 1
        db = (c.b - a) % 1
        if da <= L and db <= L:
            out.append(c)
    return out


def _pure_chain(d, c, side):
    """True when the face sequence beyond c on `side` is strips then an arc-gap."""
    while True:
        f = d.index[(c, side)]
        cls = d.classify_face(f)
        if cls == "arc-gap":
            return True
        if cls != "strip":
            return False
        (c2, s2), = [(x, s) for x, s in f.sides if x != c]
        if d.kinds[c2] != "leaf":
            return False
        c, side = c2, other_side(s2)


def mutate(al, kind: str, delta=None):
    if kind not in MUTATIONS:
        raise NotApplicable(f"unknown mutation {kind}")
    eps = al.resolution
    if eps is None:
        raise NotApplicable("lamination carries no resolution")
    d = Decomposition(al)
    leaves = set(al.leaves)

    if kind == "share-star-edge":
        for s in al.stars:
            sf = d.star_face(s)
            for e in s.polygon:
                side = other_side(IN if (e, IN) in sf.sides else OUT)
                if not _pure_chain(d, e, side):
                    continue
                a, L = _inside(e, side)
                inner = [c for c in _chords_within(leaves, a, L) if c != e]
                g = _Gen(eps)
                g.leaves = leaves - set(inner)
                w = L / 2
                p1, p2 = _chord(a, w), _chord(a + w, w)
                g.leaves |= {p1, p2}
                g.strips(a, w)
                g.strips(a + w, w)
                star = StarSpec((p1, p2, e))
                return al.with_(base=FiniteLamination(tuple(g.leaves)),
                                stars=al.stars + (star,))
        raise NotApplicable("no star edge faces a pure filler chain")

    if kind == "shrink-root":
        for i, s in enumerate(al.shells):
            face_side = IN if (s.root, IN) in d.shell_face(s).sides else OUT
            beyond = other_side(face_side)
            f = d.index[(s.root, beyond)]
            if d.classify_face(f) != "strip":
                continue
            (f1, s1), = [(x, t) for x, t in f.sides if x != s.root]
            if d.kinds[f1] != "leaf" or (delta is not None and minor_arc_gap(f1) <= delta):
                continue
            # Place a tiny root across one of the strip's arcs.
            arc = next(x for x in f.arcs if x is not None)
            h = arc.length
            r = _chord(arc.start + h / 3, h / 3)
            others = list(s.boundary) + [f1]
            new = ShellSpec(r, _sort_boundary(r, others))
            shells = al.shells[:i] + (new,) + al.shells[i + 1:]
            return al.with_(shells=shells)
        raise NotApplicable("no shell with a filler beyond its root")

    if kind == "break-order":
        for f in d.faces:
            if d.classify_face(f) != "strip":
                continue
            (g1, _), (g2, _) = f.sides
            if d.kinds[g1] != "leaf" or d.kinds[g2] != "leaf":
                continue
            if any(x is None for x in f.arcs):
                continue
            # A diagonal of the quadrilateral: both arcs start at distinct
            # non-adjacent corners.
            a1, a2 = f.arcs
            h = Chord.of(a1.start, a2.start)
            if h in leaves:
                continue
            return al.with_(base=FiniteLamination(tuple(leaves | {h})))
        raise NotApplicable("no strip between two leaves")

    if kind == "drop-annotation":
        if not al.shells:
            raise NotApplicable("no shell to drop")
        return al.with_(shells=al.shells[1:])

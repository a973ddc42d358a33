"""Finite annotated pre-laminations and the face decomposition of the disc.

A finite chord system stands in for a dense lamination. The data that a
limit would carry is given by annotations:

* a `ShellSpec` marks a face with exactly one non-leaf side, its root;
* a `StarSpec` marks a face bounded by an ideal polygon of leaves;
* `virtual` chords (raw input only) are accumulated geodesics that are not
  leaves yet.

Faces bounded by a single chord ("arc-gaps") and thin two-chord faces
("strips", both circle arcs shorter than the resolution) stand for a family
of leaves accumulating on their sides.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional

from .circle import Arc, Chord, ccw, chords_cross, fmt, minor_arc_gap, point
from .errors import InvalidLamination

IN, OUT = "in", "out"


@dataclass(frozen=True)
class FiniteLamination:
    leaves: tuple = ()

    def __post_init__(self):
        leaves = tuple(sorted(set(self.leaves)))
        if len(leaves) != len(self.leaves):
            raise InvalidLamination("duplicate leaves")
        object.__setattr__(self, "leaves", leaves)

    def __len__(self):
        return len(self.leaves)


@dataclass(frozen=True)
class ShellSpec:
    root: Chord
    boundary: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))

    @property
    def side(self) -> Arc:
        """Open arc I between the root endpoints that holds the boundary."""
        r = self.root
        if self.boundary and not (r.a < self.boundary[0].a < r.b or
                                  r.a < self.boundary[0].b < r.b):
            return Arc(r.b, r.a)
        return Arc(r.a, r.b)

    def position(self, x: Fraction) -> Fraction:
        """Clockwise distance from the start of I (its ccw end)."""
        return ccw(x, self.side.end)

    def first_endpoint_key(self, c: Chord) -> Fraction:
        return min(self.position(c.a), self.position(c.b))


@dataclass(frozen=True)
class StarSpec:
    polygon: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "polygon", tuple(self.polygon))

    def vertex(self, i: int) -> Fraction:
        """Endpoint shared by polygon[i] and polygon[i+1]."""
        f, g = self.polygon[i], self.polygon[(i + 1) % len(self.polygon)]
        common = set(f.endpoints()) & set(g.endpoints())
        if len(common) != 1:
            raise InvalidLamination(f"star edges {f} and {g} do not share one endpoint")
        return common.pop()

    def vertices(self):
        return [self.vertex(i) for i in range(len(self.polygon))]


@dataclass(frozen=True)
class AnnotatedLamination:
    base: FiniteLamination = field(default_factory=FiniteLamination)
    shells: tuple = ()
    stars: tuple = ()
    exceptions: int = 0
    # Resolution at which two-chord faces count as accumulation strips.
    resolution: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "shells", tuple(self.shells))
        object.__setattr__(self, "stars", tuple(self.stars))
        if self.exceptions < 0:
            raise InvalidLamination("negative exceptions budget")
        if self.resolution is not None:
            object.__setattr__(self, "resolution", Fraction(self.resolution))

    @property
    def leaves(self):
        return self.base.leaves

    @property
    def roots(self):
        return tuple(s.root for s in self.shells)

    @property
    def virtual(self):
        return ()

    def rotate(self, t) -> "AnnotatedLamination":
        return _rotate(self, Fraction(t))

    def with_(self, **kw):
        return replace(self, **kw)


@dataclass(frozen=True)
class RawAnnotatedLamination(AnnotatedLamination):
    virtual_chords: tuple = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "virtual_chords", tuple(sorted(set(self.virtual_chords))))

    @property
    def virtual(self):
        return self.virtual_chords


def make(leaves: Iterable = (), shells=(), stars=(), exceptions=0, resolution=None,
         virtual=None):
    """Convenience constructor accepting chords or endpoint pairs."""
    def ch(c):
        return c if isinstance(c, Chord) else Chord.of(*c)

    base = FiniteLamination(tuple(ch(c) for c in leaves))
    shells = tuple(s if isinstance(s, ShellSpec) else
                   ShellSpec(ch(s[0]), tuple(ch(b) for b in s[1])) for s in shells)
    stars = tuple(s if isinstance(s, StarSpec) else
                  StarSpec(tuple(ch(e) for e in s)) for s in stars)
    if virtual is None:
        return AnnotatedLamination(base, shells, stars, exceptions, resolution)
    return RawAnnotatedLamination(base, shells, stars, exceptions, resolution,
                                  tuple(ch(v) for v in virtual))


def _rotate(al, t):
    def r(c):
        return c.rotate(t)
    kw = dict(
        base=FiniteLamination(tuple(r(c) for c in al.leaves)),
        shells=tuple(ShellSpec(r(s.root), tuple(r(b) for b in s.boundary)) for s in al.shells),
        stars=tuple(StarSpec(tuple(r(e) for e in s.polygon)) for s in al.stars),
    )
    if isinstance(al, RawAnnotatedLamination):
        kw["virtual_chords"] = tuple(r(v) for v in al.virtual_chords)
    return replace(al, **kw)


# ---------------------------------------------------------------- JSON

def to_json(al) -> dict:
    d = {
        "leaves": [c.to_json() for c in al.leaves],
        "shells": [{"root": s.root.to_json(), "boundary": [b.to_json() for b in s.boundary]}
                   for s in al.shells],
        "stars": [{"polygon": [e.to_json() for e in s.polygon]} for s in al.stars],
        "virtual": [v.to_json() for v in al.virtual],
        "exceptions": al.exceptions,
    }
    if al.resolution is not None:
        d["resolution"] = fmt(al.resolution)
    return d


def from_json(d: dict):
    try:
        virtual = d.get("virtual") or []
        # Per-region lists are accepted and flattened: the face a virtual
        # chord bounds is determined by the geometry.
        flat = []
        for v in virtual:
            if isinstance(v, dict):
                flat.extend(v.get("chords", []))
            elif v and isinstance(v[0], list):
                flat.extend(v)
            else:
                flat.append(v)
        res = d.get("resolution")
        return make(
            leaves=[Chord.from_json(c) for c in d.get("leaves", [])],
            shells=[ShellSpec(Chord.from_json(s["root"]),
                              tuple(Chord.from_json(b) for b in s.get("boundary", [])))
                    for s in d.get("shells", [])],
            stars=[StarSpec(tuple(Chord.from_json(e) for e in s["polygon"]))
                   for s in d.get("stars", [])],
            exceptions=int(d.get("exceptions", 0)),
            resolution=None if res is None else Fraction(res),
            virtual=[Chord.from_json(v) for v in flat] if "virtual" in d and flat else None,
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        if isinstance(e, InvalidLamination):
            raise
        raise InvalidLamination(f"malformed lamination JSON: {e}") from e


def dumps(al) -> str:
    return json.dumps(to_json(al), sort_keys=True)


def loads(s: str):
    return from_json(json.loads(s))


# ---------------------------------------------------------------- faces

@dataclass
class Face:
    """One face of the disc cut by a non-crossing chord system.

    `sides` lists (chord, side) with side IN when the face lies on the ccw
    arc (a, b) of the chord. `boundary` alternates chords and nonempty arcs
    in ccw order.
    """

    key: Optional[Chord]
    sides: list
    boundary: list
    arcs: list

    @property
    def chords(self):
        return [c for c, _ in self.sides]


def _laminar_tree(chords):
    """Children of every chord (None for the top face) in ccw order, by index.

    Sorting and nesting run on integer numerators over a common denominator.
    Returns (children, integer endpoints, chord indices sorted by (a, b)).
    """
    den = math.lcm(*(c.a.denominator for c in chords), *(c.b.denominator for c in chords))
    ints = [(c.a.numerator * (den // c.a.denominator),
             c.b.numerator * (den // c.b.denominator)) for c in chords]
    order = sorted(range(len(chords)), key=lambda i: (ints[i][0], -ints[i][1]))
    children = {None: []}
    stack = []
    for i in order:
        a, b = ints[i]
        while stack and ints[stack[-1]][1] <= a:
            stack.pop()
        if stack:
            top = stack[-1]
            if b > ints[top][1]:
                raise InvalidLamination(f"chords {chords[top]} and {chords[i]} cross",
                                        witness=[chords[top].to_json(), chords[i].to_json()])
            if ints[top] == (a, b):
                raise InvalidLamination(f"duplicate chord {chords[i]}")
            children[top].append(i)
        else:
            children[None].append(i)
        children[i] = []
        stack.append(i)
    return children, ints, sorted(range(len(chords)), key=ints.__getitem__)


def faces(chords) -> list:
    """All faces of the subdivision; n chords give n + 1 faces."""
    chords = list(chords)
    if not chords:
        full = Arc(Fraction(0), Fraction(0))
        return [Face(None, [], [full], [full])]
    if len(set(chords)) != len(chords):
        raise InvalidLamination("duplicate chord")
    children, ints, by_ab = _laminar_tree(chords)
    between = Arc.between
    out = []
    for key in [None] + by_ab:
        kids = children[key]
        sides, boundary, arcs = [], [], []
        if key is None:
            last = len(kids) - 1
            for n, i in enumerate(kids):
                k = chords[i]
                boundary.append(k)
                sides.append((k, OUT))
                j = kids[0] if n == last else kids[n + 1]
                if ints[i][1] != ints[j][0]:
                    a = between(k.b, chords[j].a)
                    boundary.append(a)
                    arcs.append(a)
                else:
                    arcs.append(None)
        else:
            K = chords[key]
            cur, icur = K.a, ints[key][0]
            for i in kids:
                k = chords[i]
                if icur != ints[i][0]:
                    a = between(cur, k.a)
                    boundary.append(a)
                    arcs.append(a)
                else:
                    arcs.append(None)
                boundary.append(k)
                sides.append((k, OUT))
                cur, icur = k.b, ints[i][1]
            if icur != ints[key][1]:
                a = between(cur, K.b)
                boundary.append(a)
                arcs.append(a)
            else:
                arcs.append(None)
            boundary.append(K)
            sides.append((K, IN))
            key = K
        out.append(Face(key, sides, boundary, arcs))
    return out


def face_index(face_list):
    """Map (chord, side) to the face on that side."""
    idx = {}
    for f in face_list:
        for c, s in f.sides:
            idx[(c, s)] = f
    return idx


def other_side(s):
    return OUT if s == IN else IN


# ---------------------------------------------------------------- regions

@dataclass
class RegionReport:
    boundary: list
    classification: str  # shell | star | unannotated-polygon | arc-gap | strip | disc
    root: Optional[Chord] = None
    chords: list = field(default_factory=list)
    owner: Optional[int] = None  # index of the claiming ShellSpec/StarSpec

    def to_json(self):
        d = {"classification": self.classification,
             "boundary": [{"chord": b.to_json()} if isinstance(b, Chord) else {"arc": b.to_json()}
                          for b in self.boundary]}
        if self.root is not None:
            d["root"] = self.root.to_json()
        return d


def regions(l) -> list:
    """Faces of a bare chord system, classified without annotations."""
    leaves = l.leaves if hasattr(l, "leaves") else tuple(l)
    reps = []
    for f in faces(leaves):
        n = len(f.sides)
        cls = "disc" if n == 0 else "arc-gap" if n == 1 else "unannotated-polygon"
        reps.append(RegionReport(f.boundary, cls, None, f.chords))
    return reps


def chord_kinds(al) -> dict:
    kinds = {}
    for c in al.leaves:
        kinds[c] = "leaf"
    for r in al.roots:
        if r in kinds:
            raise InvalidLamination(f"root {r} is also a {kinds[r]}", witness=r.to_json())
        kinds[r] = "root"
    for v in al.virtual:
        if v in kinds:
            raise InvalidLamination(f"virtual chord {v} is also a {kinds[v]}", witness=v.to_json())
        kinds[v] = "virtual"
    return kinds


class Decomposition:
    """Faces of leaves, roots and virtual chords together with annotations."""

    def __init__(self, al, eps=None):
        self.al = al
        self.eps = al.resolution if eps is None else Fraction(eps)
        self.kinds = chord_kinds(al)
        self.faces = faces(self.kinds)
        self.index = face_index(self.faces)
        self.claims = {}
        for i, s in enumerate(al.shells):
            f = self.shell_face(s)
            self._claim(f, ("shell", i))
        for j, s in enumerate(al.stars):
            f = self.star_face(s)
            self._claim(f, ("star", j))

    def _claim(self, f, who):
        k = id(f)
        if k in self.claims:
            raise InvalidLamination(f"{who} and {self.claims[k]} claim the same region",
                                    witness={"region": [c.to_json() for c in f.chords]})
        self.claims[k] = who

    def shell_face(self, s: ShellSpec):
        side = IN if s.side.start == s.root.a else OUT
        return self.index[(s.root, side)]

    def star_face(self, s: StarSpec):
        e = s.polygon[0]
        for side in (IN, OUT):
            f = self.index[(e, side)]
            if set(f.chords) == set(s.polygon):
                return f
        return None

    def claim_of(self, f):
        return self.claims.get(id(f))

    def is_thin(self, f) -> bool:
        """Two-chord face standing for an accumulating family of leaves."""
        if len(f.sides) != 2 or self.eps is None:
            return False
        if any(a is not None and a.length >= self.eps for a in f.arcs):
            return False
        return sum(1 for c in f.chords if self.kinds[c] != "leaf") <= 1

    def classify_face(self, f) -> str:
        who = self.claim_of(f)
        if who is not None:
            return who[0]
        n = len(f.sides)
        if n == 0:
            return "disc"
        if n == 1:
            return "arc-gap"
        if self.is_thin(f):
            return "strip"
        return "unannotated-polygon"

    def is_open(self, f) -> bool:
        """Face kinds that belong to edges of the leaf space."""
        return self.classify_face(f) in ("arc-gap", "strip")

    def reports(self):
        out = []
        for f in self.faces:
            cls = self.classify_face(f)
            who = self.claim_of(f)
            root = self.al.shells[who[1]].root if who and who[0] == "shell" else None
            out.append(RegionReport(f.boundary, cls, root, f.chords,
                                    who[1] if who else None))
        return out


def annotated_regions(al, eps=None):
    return Decomposition(al, eps).reports()


# ---------------------------------------------------------------- validation

def validate(al) -> Decomposition:
    """Structural validation; returns the face decomposition on success."""
    leaves = set(al.leaves)
    for i, s in enumerate(al.shells):
        if not s.boundary:
            raise InvalidLamination(f"shell {i} has no boundary", witness={"shell": i})
        for b in s.boundary:
            if b not in leaves:
                raise InvalidLamination(f"shell {i} boundary chord {b} is not a leaf",
                                        witness={"shell": i, "chord": b.to_json()})
        I = s.side
        for b in s.boundary:
            for x in b.endpoints():
                if not I.contains(x):
                    raise InvalidLamination(f"shell {i}: {b} not strictly inside I",
                                            witness={"shell": i, "chord": b.to_json()})
        keys = [s.first_endpoint_key(b) for b in s.boundary]
        if any(k1 >= k2 for k1, k2 in zip(keys, keys[1:])):
            raise InvalidLamination(f"shell {i}: boundary not in clockwise order along I",
                                    witness={"shell": i})
    for j, s in enumerate(al.stars):
        if len(s.polygon) < 3:
            raise InvalidLamination(f"star {j} has fewer than 3 edges", witness={"star": j})
        for e in s.polygon:
            if e not in leaves:
                raise InvalidLamination(f"star {j} edge {e} is not a leaf",
                                        witness={"star": j, "chord": e.to_json()})
        vs = s.vertices()
        if len(set(vs)) != len(vs):
            raise InvalidLamination(f"star {j} vertices repeat", witness={"star": j})
        if sum(ccw(vs[i - 1], vs[i]) for i in range(len(vs))) != 1:
            raise InvalidLamination(f"star {j} vertices not counterclockwise",
                                    witness={"star": j})
        for i, e in enumerate(s.polygon):
            if set(e.endpoints()) != {vs[i - 1], vs[i]}:
                raise InvalidLamination(f"star {j} edge {i} does not join its vertices",
                                        witness={"star": j})
    d = Decomposition(al)
    for i, s in enumerate(al.shells):
        f = d.shell_face(s)
        if set(f.chords) != {s.root, *s.boundary}:
            raise InvalidLamination(f"shell {i} does not match a region",
                                    witness={"shell": i,
                                             "region": [c.to_json() for c in f.chords]})
    for j, s in enumerate(al.stars):
        if d.star_face(s) is None:
            raise InvalidLamination(f"star {j} does not bound a region", witness={"star": j})
    return d


def crossing_pairs(chords):
    chords = list(chords)
    return [(c1, c2) for i, c1 in enumerate(chords) for c2 in chords[i + 1:]
            if chords_cross(c1, c2)]


def gap(c):
    return minor_arc_gap(c)


__all__ = [
    "FiniteLamination", "ShellSpec", "StarSpec", "AnnotatedLamination",
    "RawAnnotatedLamination", "RegionReport", "Decomposition", "Face", "make",
    "faces", "regions", "annotated_regions", "validate", "to_json", "from_json",
    "dumps", "loads", "IN", "OUT", "point",
]

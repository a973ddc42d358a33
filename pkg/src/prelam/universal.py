"""A lazily materialised universal planar structure and embeddings into it.

The model is a tree of lines with dyadic labels. Every point of a line is a
member of one branching on each side; the other members of a branching are
the start points of rays. A branching's trunk is the side of the owner's
line it sits on. Cyclic branchings of any degree and handedness hang off any
branching on request: two fresh slots of the host become the first two
separatrices and new pair branchings, each with its own trunk line, close
the cycle.

Addresses are slash paths, labels written as exact decimals:

    /U                      root line
    /U/1.5                  point of the root line
    /U/1.5/+                branching on the + side of that point
    /U/1.5/+/2              ray starting at slot 2 (a line)
    /U/1.5/+/2/0            its start point
    /U/1.5/+/2~3L           cyclic gadget hosted at slot 2
    /U/1.5/+/2~3L/z1        a separatrix;  .../P1 a pair branching;
    /U/1.5/+/2~3L/T1        the trunk line of P1
"""

from __future__ import annotations

import bisect
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .circle import fmt
from .errors import BadBounds, DomainError, StructuralError
from .planar import PlanarPresentation, structure
from .properties import Verdict

ROOT = "/U"


def dec(x: Fraction) -> str:
    """Exact decimal for a dyadic rational."""
    x = Fraction(x)
    d = x.denominator
    k = d.bit_length() - 1
    if d != 1 << k:
        raise DomainError(f"{x} is not dyadic")
    if k == 0:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    digits = str(abs(x.numerator) * 5 ** k).rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}".rstrip("0")


def _sign(side: str) -> int:
    return 1 if side == "+" else -1


def _side(sign: int) -> str:
    return "+" if sign > 0 else "-"


class SlotSet:
    """Finite sample of a dense order, labelled by dyadic rationals."""

    def __init__(self, labels=()):
        self.labels = sorted(Fraction(x) for x in labels)

    def __contains__(self, x):
        i = bisect.bisect_left(self.labels, x)
        return i < len(self.labels) and self.labels[i] == x

    def __len__(self):
        return len(self.labels)

    def copy(self):
        return SlotSet(self.labels)

    def between(self, lo=None, hi=None) -> Fraction:
        """Fresh label strictly between lo and hi, next to lo when given."""
        if lo is not None and hi is not None and not lo < hi:
            raise BadBounds(f"need lo < hi, got {lo} and {hi}")
        inner = [x for x in self.labels
                 if (lo is None or x > lo) and (hi is None or x < hi)]
        if lo is not None:
            up = inner[0] if inner else hi
            return lo + 1 if up is None else (lo + up) / 2
        if hi is not None:
            down = inner[-1] if inner else None
            return hi - 1 if down is None else (down + hi) / 2
        return Fraction(1, 2) if not self.labels else self.labels[-1] + 1

    def insert(self, x):
        x = Fraction(x)
        if x in self:
            raise BadBounds(f"slot {x} already used")
        bisect.insort(self.labels, x)

    def insert_between(self, lo=None, hi=None) -> Fraction:
        x = self.between(lo, hi)
        self.insert(x)
        return x

    def refine(self):
        """One round: a new least and greatest label and a midpoint in every gap."""
        if not self.labels:
            self.insert(Fraction(1, 2))
            return
        old = list(self.labels)
        new = [old[0] - 1, old[-1] + 1] + [(a + b) / 2 for a, b in zip(old, old[1:])]
        for x in new:
            self.insert(x)


# ---------------------------------------------------------------- model

@dataclass
class Line:
    kind: str             # root | ray | trunk
    slots: SlotSet
    parent: Optional[str] = None   # host branching of a ray


@dataclass
class Branching:
    trunk: tuple          # (line, anchor label, outward sign)
    slots: SlotSet
    members: dict         # label -> point address
    owner: Optional[Fraction] = None   # label of the owning line point
    owner_side: Optional[int] = None


@dataclass
class Gadget:
    k: int
    side: str
    points: list
    pairs: list           # k branching addresses; pairs[i] holds points i, i+1


class UniversalModel:
    """Single-writer lazily expanded model with a replayable log."""

    def __init__(self):
        self.lines = {ROOT: Line("root", SlotSet())}
        self.points = {}      # address -> ("line", line, label) | ("sep", gadget, i)
        self.branchings = {}
        self.gadgets = {}
        self.sides = {}       # (point, side) -> branching address
        self.log = []

    # -- primitive, logged operations

    def add_point(self, line: str, label) -> str:
        label = Fraction(label)
        rec = self.lines[line]
        if rec.kind != "root" and label <= 0:
            raise BadBounds(f"label {label} outside {line}")
        rec.slots.insert(label)
        addr = f"{line}/{dec(label)}"
        self.points[addr] = ("line", line, label)
        self.log.append({"op": "point", "line": line, "label": fmt(label)})
        return addr

    def branching_at(self, point: str, side: str) -> str:
        """The unique branching on `side` of a line point."""
        if (point, side) in self.sides:
            return self.sides[(point, side)]
        kind, line, label = self.points[point]
        if kind != "line":
            raise StructuralError(f"{point} is a separatrix; its branchings are fixed")
        addr = f"{point}/{side}"
        self.branchings[addr] = Branching((line, label, _sign(side)), SlotSet([0]),
                                          {Fraction(0): point}, Fraction(0), _sign(side))
        self.sides[(point, side)] = addr
        self.log.append({"op": "branching", "point": point, "side": side})
        return addr

    def add_member(self, branching: str, label) -> str:
        """Materialise the ray starting at slot `label`; returns its start point."""
        label = Fraction(label)
        b = self.branchings[branching]
        b.slots.insert(label)
        ray = f"{branching}/{dec(label)}"
        self.lines[ray] = Line("ray", SlotSet([0]), branching)
        start = f"{ray}/0"
        self.points[start] = ("line", ray, Fraction(0))
        self.sides[(start, "-")] = branching
        b.members[label] = start
        self.log.append({"op": "member", "branching": branching, "label": fmt(label)})
        return start

    def request_cyclic(self, branching: str, u0, u1, k: int, side: str) -> str:
        """Cyclic branching of degree k whose first two separatrices take the
        host slots u0 and u1. With side L the listing is the positive order,
        so u0 < u1; with R, u0 > u1."""
        u0, u1 = Fraction(u0), Fraction(u1)
        if k < 3 or side not in ("L", "R"):
            raise DomainError("need k >= 3 and side L or R")
        if (u0 < u1) != (side == "L"):
            raise BadBounds("slot order disagrees with the side")
        host = self.branchings[branching]
        for u in (u0, u1):
            if u in host.slots:
                raise BadBounds(f"slot {u} already used")
        g = f"{branching}/{dec(u0)}~{k}{side}"
        pts = [f"{g}/z{i}" for i in range(k)]
        pairs = [branching] + [f"{g}/P{i}" for i in range(1, k)]
        host.slots.insert(u0)
        host.slots.insert(u1)
        host.members[u0], host.members[u1] = pts[0], pts[1]
        for i in range(1, k):
            t = f"{g}/T{i}"
            self.lines[t] = Line("trunk", SlotSet())
            a, b = pts[i], pts[(i + 1) % k]
            first, second = (a, b) if side == "L" else (b, a)
            self.branchings[pairs[i]] = Branching(
                (t, Fraction(0), 1), SlotSet([0, 1]),
                {Fraction(0): first, Fraction(1): second})
        for i, pnt in enumerate(pts):
            self.points[pnt] = ("sep", g, i)
        self.gadgets[g] = Gadget(k, side, pts, pairs)
        self.log.append({"op": "cyclic", "branching": branching, "u0": fmt(u0),
                         "u1": fmt(u1), "k": k, "side": side})
        return g

    def refine(self, branching: str):
        """Refine the slots of a branching; rays stay unmaterialised."""
        self.branchings[branching].slots.refine()
        self.log.append({"op": "refine", "branching": branching})

    # -- derived queries

    def insert_between(self, branching: str, lo=None, hi=None) -> str:
        """New member strictly between two members (addresses or labels)."""
        b = self.branchings[branching]
        lo, hi = self._label(b, lo), self._label(b, hi)
        return self.add_member(branching, b.slots.between(lo, hi))

    def point_between(self, line: str, lo=None, hi=None) -> str:
        rec = self.lines[line]
        if rec.kind != "root" and lo is None:
            lo = Fraction(0)
        return self.add_point(line, rec.slots.between(lo, hi))

    def cyclic_near(self, line: str, lo, hi, k: int, side: str) -> str:
        """Cyclic branching hanging from a fresh point between lo and hi."""
        y = self.point_between(line, lo, hi)
        b = self.branching_at(y, "+")
        ua = self.branchings[b].slots.between(0, None)
        u0, u1 = (ua, ua + 1) if side == "L" else (ua + 1, ua)
        return self.request_cyclic(b, u0, u1, k, side)

    @staticmethod
    def _label(b, x):
        if x is None or isinstance(x, (int, Fraction)):
            return x
        for u, p in b.members.items():
            if p == x:
                return u
        raise DomainError(f"{x} is not a member")

    def label_in(self, branching: str, point: str):
        return self._label(self.branchings[branching], point)

    def trunk_of(self, branching: str) -> tuple:
        return self.branchings[branching].trunk

    def continuation(self, branching: str, label) -> Optional[tuple]:
        """(line, anchor, outward) along which the member at `label` continues."""
        b = self.branchings[branching]
        label = Fraction(label)
        if b.owner is not None and label == b.owner:
            line, anchor, out = b.trunk
            return (line, anchor, -out)
        p = b.members.get(label)
        if p is None or self.points[p][0] == "sep":
            return None
        _, line, anchor = self.points[p]
        return (line, anchor, 1)

    def line_of(self, point: str):
        rec = self.points[point]
        return (rec[1], rec[2]) if rec[0] == "line" else (None, None)

    # -- serialisation

    def dumps(self) -> str:
        return json.dumps(self.log, sort_keys=True)

    @classmethod
    def replay(cls, log) -> "UniversalModel":
        if isinstance(log, str):
            log = json.loads(log)
        m = cls()
        for ev in log:
            op = ev["op"]
            if op == "point":
                m.add_point(ev["line"], Fraction(ev["label"]))
            elif op == "branching":
                m.branching_at(ev["point"], ev["side"])
            elif op == "member":
                m.add_member(ev["branching"], Fraction(ev["label"]))
            elif op == "cyclic":
                m.request_cyclic(ev["branching"], Fraction(ev["u0"]), Fraction(ev["u1"]),
                                 ev["k"], ev["side"])
            elif op == "refine":
                m.refine(ev["branching"])
            else:
                raise DomainError(f"unknown log entry {op}")
        return m

    def counts(self):
        return {"lines": len(self.lines), "points": len(self.points),
                "branchings": len(self.branchings), "cyclics": len(self.gadgets)}


# ---------------------------------------------------------------- embedding

@dataclass
class EdgeImage:
    line: str
    dir: int                          # line direction of ports[0] -> ports[1]
    anchors: dict = field(default_factory=dict)   # end -> label bounding that end
    labels: list = field(default_factory=list)    # sample labels in port order

    def to_json(self):
        return {"line": self.line, "dir": self.dir,
                "anchors": {str(k): fmt(v) for k, v in self.anchors.items()},
                "labels": [fmt(x) for x in self.labels]}


@dataclass
class EmbeddingMap:
    points: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)
    switches: dict = field(default_factory=dict)
    cyclics: dict = field(default_factory=dict)
    charts: list = field(default_factory=list)

    def copy(self):
        return EmbeddingMap(dict(self.points),
                            {k: EdgeImage(v.line, v.dir, dict(v.anchors), list(v.labels))
                             for k, v in self.edges.items()},
                            dict(self.switches), dict(self.cyclics), list(self.charts))

    def to_json(self):
        return {"points": dict(sorted(self.points.items())),
                "edges": {k: v.to_json() for k, v in sorted(self.edges.items())},
                "switches": dict(sorted(self.switches.items())),
                "cyclics": {str(k): v for k, v in sorted(self.cyclics.items())},
                "charts": self.charts}


class _Embedder:
    def __init__(self, p, m, seed, limit):
        self.p, self.m = p, m
        self.ix = structure(p)
        self.emb = seed.copy() if seed is not None else EmbeddingMap()
        self.limit = limit
        self.placed = 0
        self.edge = {e.id: e for e in p.edges}
        self.sw = {s.id: s for s in p.switches}
        self.att = {}
        for s in p.switches:
            self.att[s.trunk] = ("trunk", s.id, None)
            for x, port in s.branches:
                if port is not None:
                    self.att[port] = ("member", s.id, x)
        self.port_edge = {}
        for e in p.edges:
            for j, port in enumerate(e.ports):
                if port is not None:
                    self.port_edge[port] = (e.id, j)
        self.switches_of = {}
        for s in p.switches:
            for x in s.members:
                self.switches_of.setdefault(x, []).append(s.id)
        self.cyc_of = {}
        for ci, c in enumerate(p.cyclics):
            for i, x in enumerate(c.points):
                self.cyc_of[x] = (ci, i)
        self.queue = deque()
        self.seen_edges, self.seen_switches = set(), set()

    def full(self):
        return self.limit is not None and self.placed >= self.limit

    def run(self):
        if not self.p.edges:
            return self.emb
        e0 = self.p.edges[0]
        if e0.id not in self.emb.edges:
            self.place(e0, ROOT, None, 1, 0)
        else:
            # Resuming: the frontier is everything already mapped.
            for eid in self.emb.charts:
                self.visit_edge(self.edge[eid])
            for sid in self.emb.switches:
                self.queue.append(("expand", sid))
            for ci in self.emb.cyclics:
                self.queue_pairs(ci)
        while self.queue and not self.full():
            task = self.queue.popleft()
            getattr(self, task[0])(*task[1:])
        return self.emb

    # -- edges

    def place(self, e, line, anchor, out, k):
        """Lay the samples of e on `line` from `anchor` outward; end k is at anchor."""
        if e.id in self.emb.edges:
            self.visit_edge(e)
            return
        d = out if k == 0 else -out
        img = EdgeImage(line, d)
        if anchor is not None:
            img.anchors[k] = anchor
        order = list(e.samples) if k == 0 else list(e.samples)[::-1]
        slots = self.m.lines[line].slots
        cur = anchor
        if cur is None and self.m.lines[line].kind != "root":
            cur = Fraction(0)
        labs = []
        for x in order:
            lab = slots.between(cur, None) if out > 0 else slots.between(None, cur)
            self.emb.points[x] = self.m.add_point(line, lab)
            labs.append(lab)
            cur = lab
        img.labels = labs if k == 0 else labs[::-1]
        self.emb.edges[e.id] = img
        self.emb.charts.append(e.id)
        self.placed += 1
        self.visit_edge(e)

    def visit_edge(self, e):
        if e.id in self.seen_edges:
            return
        self.seen_edges.add(e.id)
        for j in (0, 1):
            if e.ports[j] is not None:
                self.queue.append(("attach", e, j))

    def extreme(self, e, j):
        img = self.emb.edges[e.id]
        if img.labels:
            return img.labels[-1] if j == 1 else img.labels[0]
        return img.anchors.get(1 - j)

    def attach(self, e, j):
        kind, sid, x = self.att[e.ports[j]]
        img = self.emb.edges[e.id]
        if sid in self.emb.switches:
            b = self.emb.switches[sid]
            if kind == "trunk":
                img.anchors.setdefault(j, self.m.trunk_of(b)[1])
            else:
                lab = self.m.label_in(b, self.emb.points[x])
                img.anchors.setdefault(j, self.m.continuation(b, lab)[1])
            self.queue.append(("expand", sid))
            return
        out = img.dir if j == 1 else -img.dir
        a = self.extreme(e, j)
        slots = self.m.lines[img.line].slots
        if a is None and self.m.lines[img.line].kind != "root":
            a = Fraction(0)
        if a is None:
            lab = slots.between(None, None)
        else:
            lab = slots.between(a, None) if out > 0 else slots.between(None, a)
        y = self.m.add_point(img.line, lab)
        img.anchors[j] = lab
        if kind == "trunk":
            b = self.m.branching_at(y, _side(-out))
            self.map_switch(sid, b, {})
        else:
            self.emb.points[x] = y
            b = self.m.branching_at(y, _side(out))
            self.map_switch(sid, b, {x: Fraction(0)})

    # -- switches

    def map_switch(self, sid, b, fixed):
        s = self.sw[sid]
        if sid not in self.emb.switches:
            self.emb.switches[sid] = b
            mem = list(s.members)
            for x in mem:
                if x in self.emb.points and x not in fixed:
                    raise StructuralError(f"embedding defect: {x} reached twice")
            tmp = self.m.branchings[b].slots.copy()
            labels = {}
            lo = None
            for i, x in enumerate(mem):
                if x in fixed:
                    lab = fixed[x]
                    if lo is not None and lab <= lo:
                        raise StructuralError(f"embedding defect: order at {sid}")
                else:
                    hi = next((fixed[y] for y in mem[i + 1:] if y in fixed), None)
                    lab = tmp.between(lo, hi)
                    tmp.insert(lab)
                labels[x] = lab
                lo = lab
            # Cyclic pairs first: their two slots become separatrices.
            done = set(fixed)
            for ci, c in enumerate(self.p.cyclics):
                inter = [x for x in mem if x in set(c.points)]
                if len(inter) != 2 or ci in self.emb.cyclics:
                    continue
                self.map_cyclic(ci, b, inter, labels)
                done.update(inter)
            for x in mem:
                if x not in done:
                    self.emb.points[x] = self.m.add_member(b, labels[x])
        self.queue.append(("expand", sid))

    def map_cyclic(self, ci, b, pair, labels):
        c = self.p.cyclics[ci]
        k = len(c.points)
        a, bb = (c.points.index(z) for z in pair)
        j0 = a if c.side == "L" else bb
        rot = [c.points[(j0 + i) % k] for i in range(k)]
        g = self.m.request_cyclic(b, labels[rot[0]], labels[rot[1]], k, c.side)
        gad = self.m.gadgets[g]
        self.emb.cyclics[ci] = g
        for z, w in zip(rot, gad.points):
            self.emb.points[z] = w
        self.queue_pairs(ci)

    def queue_pairs(self, ci):
        """Map the switches held by the pair branchings of a placed gadget."""
        c = self.p.cyclics[ci]
        gad = self.m.gadgets[self.emb.cyclics[ci]]
        k = len(c.points)
        inv = {w: z for z, w in self.emb.points.items()}
        rot = [inv[w] for w in gad.points]
        for i in range(1, k):
            z1, z2 = rot[i], rot[(i + 1) % k]
            common = set(self.switches_of.get(z1, ())) & set(self.switches_of.get(z2, ()))
            if not common:
                continue
            sid = sorted(common)[0]
            pb = gad.pairs[i]
            fx = {z: self.m.label_in(pb, self.emb.points[z]) for z in (z1, z2)}
            self.queue.append(("map_switch", sid, pb, fx))

    def expand(self, sid):
        if sid in self.seen_switches:
            return
        self.seen_switches.add(sid)
        s = self.sw[sid]
        b = self.emb.switches[sid]
        ei, k = self.port_edge[s.trunk]
        line, anchor, out = self.m.trunk_of(b)
        self.queue.append(("place", self.edge[ei], line, anchor, out, k))
        for x, port in s.branches:
            lab = self.m.label_in(b, self.emb.points[x])
            if port is not None:
                ej, kj = self.port_edge[port]
                cont = self.m.continuation(b, lab)
                if cont is None:
                    raise StructuralError(f"embedding defect: {x} has no continuation")
                self.queue.append(("place", self.edge[ej], *cont, kj))
            elif x not in self.cyc_of:
                for other in self.switches_of.get(x, ()):
                    if other != sid:
                        b2 = self.m.branching_at(self.emb.points[x], "+")
                        self.queue.append(("map_switch", other, b2, {x: Fraction(0)}))


def embed(p: PlanarPresentation, m: Optional[UniversalModel] = None,
          seed: Optional[EmbeddingMap] = None, limit: Optional[int] = None) -> EmbeddingMap:
    """Map the presentation into the model chart by chart, breadth first from
    edge 0. With `seed` the images already chosen are kept; `limit` stops
    after that many new charts."""
    m = UniversalModel() if m is None else m
    return _Embedder(p, m, seed, limit).run()


# ---------------------------------------------------------------- verification

def verify_embedding(p: PlanarPresentation, m: UniversalModel, emb: EmbeddingMap) -> Verdict:
    bad = []
    img = emb.points
    for x in p.points:
        if x not in img:
            bad.append({"check": "total", "point": x})
        elif img[x] not in m.points:
            bad.append({"check": "exists", "point": x, "address": img[x]})
    seen = {}
    for x, a in sorted(img.items()):
        if a in seen:
            bad.append({"check": "injective", "points": [seen[a], x], "address": a})
        seen.setdefault(a, x)
    if bad:
        return Verdict(False, bad)

    att = {}
    for s in p.switches:
        att[s.trunk] = ("trunk", s, None)
        for x, port in s.branches:
            if port is not None:
                att[port] = ("member", s, x)

    on_line = {}
    for x, a in img.items():
        line, lab = m.line_of(a)
        if line is not None:
            on_line.setdefault(line, []).append((lab, x))

    for e in p.edges:
        ei = emb.edges.get(e.id)
        if ei is None:
            bad.append({"check": "total", "edge": e.id})
            continue
        labs = []
        for x in e.samples:
            line, lab = m.line_of(img[x])
            if line != ei.line:
                bad.append({"check": "incidence", "edge": e.id, "point": x,
                            "reason": "sample off the edge line"})
            labs.append(lab)
        if any((b - a) * ei.dir <= 0 for a, b in zip(labs, labs[1:]) if a is not None and b is not None):
            bad.append({"check": "order", "edge": e.id, "reason": "samples out of order"})
        bounds = {}
        for j in (0, 1):
            port = e.ports[j]
            if port is None:
                continue
            inward = -ei.dir if j == 1 else ei.dir
            kind, s, x = att[port]
            b = emb.switches.get(s.id)
            if b is None:
                bad.append({"check": "total", "switch": s.id})
                continue
            if kind == "trunk":
                ref = m.trunk_of(b)
            else:
                lab = m.label_in(b, img[x]) if img[x] in m.branchings[b].members.values() else None
                ref = m.continuation(b, lab) if lab is not None else None
            if ref is None or ref[0] != ei.line or ref[2] != inward:
                bad.append({"check": "incidence", "edge": e.id, "end": j,
                            "reason": "end not attached along its switch"})
                continue
            bounds[j] = ref[1]
            if any((lab - ref[1]) * inward <= 0 for lab in labs if lab is not None):
                bad.append({"check": "incidence", "edge": e.id, "end": j,
                            "reason": "sample beyond the attachment"})
        extent = [v for v in labs if v is not None] + list(bounds.values())
        if len(extent) >= 2:
            lo, hi = min(extent), max(extent)
            own = set(e.samples)
            for lab, x in on_line.get(ei.line, []):
                if x not in own and lo < lab < hi:
                    bad.append({"check": "incidence", "edge": e.id, "point": x,
                                "reason": "foreign point inside the edge"})

    for s in p.switches:
        b = emb.switches.get(s.id)
        if b is None:
            continue
        members = m.branchings[b].members
        inv = {pt: u for u, pt in members.items()}
        labs = []
        for x in s.members:
            if img[x] not in inv:
                bad.append({"check": "incidence", "switch": s.id, "point": x,
                            "reason": "member outside the branching"})
                labs.append(None)
            else:
                labs.append(inv[img[x]])
        known = [(u, x) for u, x in zip(labs, s.members) if u is not None]
        for (u1, x1), (u2, x2) in zip(known, known[1:]):
            if not u1 < u2:
                bad.append({"check": "order", "switch": s.id, "pair": [x1, x2]})

    for ci, c in enumerate(p.cyclics):
        g = emb.cyclics.get(ci)
        if g is None or g not in m.gadgets:
            bad.append({"check": "total", "cyclic": ci})
            continue
        gad = m.gadgets[g]
        if gad.side != c.side:
            bad.append({"check": "side", "cyclic": ci, "model": gad.side, "presentation": c.side})
        ims = [img[x] for x in c.points]
        k = len(ims)
        if gad.k != k or not any(ims == gad.points[i:] + gad.points[:i] for i in range(k)):
            bad.append({"check": "cyclic-order", "cyclic": ci})
    return Verdict(not bad, bad)


# ---------------------------------------------------------------- orders

def dyadic_generator(prev):
    """Refinement rounds of the dyadic slot policy."""
    s = SlotSet(prev or ())
    s.refine()
    return list(s.labels)


def check_maximal_order(generator, rounds: int) -> Verdict:
    """Finite certificate that the generated order is dense without ends.

    After `rounds` refinements the last round must reach below the previous
    minimum, above the previous maximum, and into every gap between
    consecutive earlier elements.
    """
    if rounds < 1:
        raise DomainError("need at least one refinement round")
    cur = sorted(generator(None))
    prev = cur
    for _ in range(rounds):
        prev, cur = cur, sorted(generator(list(cur)))
    bad = []
    if not prev:
        return Verdict(bool(cur), [] if cur else [{"reason": "empty"}])
    if cur[0] >= prev[0]:
        bad.append({"reason": "has a minimum", "at": str(prev[0])})
    if cur[-1] <= prev[-1]:
        bad.append({"reason": "has a maximum", "at": str(prev[-1])})
    for a, b in zip(prev, prev[1:]):
        i = bisect.bisect_right(cur, a)
        if i >= len(cur) or not cur[i] < b:
            bad.append({"reason": "adjacent pair", "pair": [str(a), str(b)]})
    return Verdict(not bad, bad)

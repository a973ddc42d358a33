"""Switch-tree presentations of (singular) planar structures.

A presentation has

* edges: open segments with two ports (None marks an open end) and ordered
  interior sample points;
* switches: a trunk port and an ordered list of (point, port) branches; a
  point sitting in two switches carries port None in both;
* cyclics: cyclically ordered point sets with a side flag. "L" means the
  listed order is the positive one, "R" that it is the reverse.

Connectivity is computed on a graph whose nodes are edge segments (between
consecutive samples), points and switch hubs.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import SizeExceeded, StructuralError, UnknownPoint

ISO_BOUND = 4000


@dataclass(frozen=True)
class Edge:
    id: str
    ports: tuple  # (port or None, port or None)
    samples: tuple = ()


@dataclass(frozen=True)
class Switch:
    id: str
    trunk: str
    branches: tuple  # ((point, port or None), ...)

    @property
    def members(self):
        return tuple(x for x, _ in self.branches)


@dataclass(frozen=True)
class Cyclic:
    points: tuple
    side: str = "L"

    def positive(self):
        return self.points if self.side == "L" else tuple(reversed(self.points))


@dataclass(frozen=True)
class PlanarPresentation:
    points: tuple = ()
    edges: tuple = ()
    switches: tuple = ()
    cyclics: tuple = ()

    def to_json(self):
        return {
            "points": list(self.points),
            "edges": [{"id": e.id, "ports": list(e.ports), "samples": list(e.samples)}
                      for e in self.edges],
            "switches": [{"id": s.id, "trunk": s.trunk,
                          "branches": [[x, p] for x, p in s.branches]} for s in self.switches],
            "cyclics": [{"points": list(c.points), "side": c.side} for c in self.cyclics],
        }

    @classmethod
    def from_json(cls, d):
        try:
            edges = tuple(Edge(e.get("id", f"e{i}"), tuple(e["ports"]), tuple(e.get("samples", ())))
                          for i, e in enumerate(d.get("edges", [])))
            switches = tuple(Switch(s.get("id", f"s{i}"), s["trunk"],
                                    tuple((x, p) for x, p in s["branches"]))
                             for i, s in enumerate(d.get("switches", [])))
            cyclics = tuple(Cyclic(tuple(c["points"]), c.get("side", "L"))
                            for c in d.get("cyclics", []))
            for e in edges:
                if len(e.ports) != 2:
                    raise StructuralError(f"edge {e.id} needs two ports")
            return cls(tuple(d.get("points", [])), edges, switches, cyclics)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, StructuralError):
                raise
            raise StructuralError(f"malformed presentation JSON: {e}") from e

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------- structure

@dataclass
class Index:
    """Incidence tables of a structurally valid presentation."""

    port_edge: dict = field(default_factory=dict)    # port -> (edge idx, end)
    port_user: dict = field(default_factory=dict)    # port -> ("trunk", s) | ("branch", s, x)
    sample_at: dict = field(default_factory=dict)    # point -> (edge idx, position)
    member_of: dict = field(default_factory=dict)    # point -> [(switch idx, position)]
    end_user: dict = field(default_factory=dict)     # (edge idx, end) -> user or None


def structure(p: PlanarPresentation) -> Index:
    ix = Index()
    pts = set(p.points)
    if len(pts) != len(p.points):
        raise StructuralError("duplicate point labels")
    ids = [e.id for e in p.edges] + [s.id for s in p.switches]
    if len(set(ids)) != len(ids):
        raise StructuralError("duplicate edge/switch ids")
    for i, e in enumerate(p.edges):
        for end, port in enumerate(e.ports):
            if port is None:
                continue
            if port in ix.port_edge:
                raise StructuralError(f"port {port} declared twice", witness={"port": port})
            ix.port_edge[port] = (i, end)
        for j, x in enumerate(e.samples):
            if x not in pts:
                raise StructuralError(f"unknown sample point {x}", witness={"point": x})
            if x in ix.sample_at:
                raise StructuralError(f"point {x} sampled twice", witness={"point": x})
            ix.sample_at[x] = (i, j)
    for si, s in enumerate(p.switches):
        if s.trunk is None or s.trunk not in ix.port_edge:
            raise StructuralError(f"switch {s.id} has an unknown trunk port", witness={"switch": s.id})
        uses = [(s.trunk, ("trunk", si))]
        seen = set()
        for k, (x, port) in enumerate(s.branches):
            if x not in pts:
                raise StructuralError(f"unknown point {x} in switch {s.id}", witness={"point": x})
            if x in seen:
                raise StructuralError(f"point {x} twice in switch {s.id}", witness={"point": x})
            seen.add(x)
            ix.member_of.setdefault(x, []).append((si, k))
            if port is not None:
                if port not in ix.port_edge:
                    raise StructuralError(f"unknown port {port}", witness={"port": port})
                uses.append((port, ("branch", si, x)))
        for port, user in uses:
            if port in ix.port_user:
                raise StructuralError(f"port {port} used twice", witness={"port": port})
            ix.port_user[port] = user
    for port in ix.port_edge:
        if port not in ix.port_user:
            raise StructuralError(f"dangling port {port}", witness={"port": port})
    for x in p.points:
        occ = ix.member_of.get(x, [])
        if x in ix.sample_at and occ:
            raise StructuralError(f"point {x} is both a sample and a member", witness={"point": x})
        if x not in ix.sample_at and not occ:
            raise StructuralError(f"point {x} is not attached", witness={"point": x})
        if len(occ) > 2:
            raise StructuralError(f"point {x} in more than two switches", witness={"point": x})
        ports = [p.switches[si].branches[k][1] for si, k in occ]
        if len(occ) == 1 and ports[0] is None:
            raise StructuralError(f"point {x} has a free side", witness={"point": x})
        if len(occ) == 2 and (ports[0] is not None or ports[1] is not None):
            raise StructuralError(f"point {x} in two switches carries a port", witness={"point": x})
    for c in p.cyclics:
        for x in c.points:
            if x not in pts:
                raise StructuralError(f"unknown cyclic point {x}", witness={"point": x})
        if c.side not in ("L", "R"):
            raise StructuralError(f"bad side flag {c.side}")
    for i, e in enumerate(p.edges):
        for end, port in enumerate(e.ports):
            ix.end_user[(i, end)] = None if port is None else ix.port_user[port]
    if p.points or p.edges:
        if _count(p, ix, set()) != 1:
            raise StructuralError("presentation is not connected")
    return ix


# ---------------------------------------------------------------- connectivity

class _DSU:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _seg_at(p, ix, port):
    i, end = ix.port_edge[port]
    return ("seg", i, 0 if end == 0 else len(p.edges[i].samples))


def _count(p, ix, removed) -> int:
    d = _DSU()
    for i, e in enumerate(p.edges):
        for j in range(len(e.samples) + 1):
            d.add(("seg", i, j))
        for j, x in enumerate(e.samples):
            if x in removed:
                continue
            d.add(("pt", x))
            d.union(("pt", x), ("seg", i, j))
            d.union(("pt", x), ("seg", i, j + 1))
    for si, s in enumerate(p.switches):
        hub = ("hub", si)
        d.add(hub)
        d.union(hub, _seg_at(p, ix, s.trunk))
        for x, port in s.branches:
            if x in removed:
                continue
            d.add(("pt", x))
            d.union(("pt", x), hub)
            if port is not None:
                d.union(("pt", x), _seg_at(p, ix, port))
    return len({d.find(n) for n in d.parent})


def components_after_removal(p: PlanarPresentation, A, ix: Optional[Index] = None) -> int:
    A = set(A)
    pts = set(p.points)
    for x in A:
        if x not in pts:
            raise UnknownPoint(f"unknown point {x}", witness={"point": x})
    ix = ix or structure(p)
    return _count(p, ix, A)


# ---------------------------------------------------------------- axioms

@dataclass
class AxiomReport:
    items: dict  # 1..5 -> list of witnesses

    @property
    def passed(self):
        return not any(self.items.values())

    def to_json(self):
        return {"pass": self.passed,
                "items": {str(k): {"pass": not v, "witnesses": v} for k, v in self.items.items()}}


def _successor(seq, x):
    return seq[(seq.index(x) + 1) % len(seq)]


def check_axioms(p: PlanarPresentation) -> AxiomReport:
    ix = structure(p)
    items = {1: [], 2: [], 3: [], 4: [], 5: []}
    owner = {}
    for ci, c in enumerate(p.cyclics):
        if len(set(c.points)) != len(c.points):
            items[1].append({"cyclic": ci, "reason": "repeated point"})
        for x in c.points:
            if x in owner and owner[x] != ci:
                items[1].append({"point": x, "cyclics": [owner[x], ci]})
            owner.setdefault(x, ci)
        if len(c.points) < 3:
            items[2].append({"cyclic": ci, "size": len(c.points)})
    for ci, c in enumerate(p.cyclics):
        pos = c.positive()
        cset = set(pos)
        for s in p.switches:
            mem = s.members
            inter = [x for x in mem if x in cset]
            if not inter:
                continue
            if len(inter) != 2:
                items[3].append({"cyclic": ci, "switch": s.id, "reason": "meets in %d points" % len(inter)})
                continue
            x, y = inter
            if mem.index(y) != mem.index(x) + 1:
                items[3].append({"cyclic": ci, "switch": s.id, "reason": "not consecutive in switch"})
            elif _successor(pos, x) != y:
                items[3].append({"cyclic": ci, "switch": s.id, "pair": [x, y],
                                 "reason": "successor direction disagrees"})
        if len(c.points) >= 1:
            n = _count(p, ix, cset)
            if n != len(cset):
                items[4].append({"cyclic": ci, "components": n, "expected": len(cset)})
    for x in p.points:
        if x in owner:
            continue
        n = _count(p, ix, {x})
        if n != 2:
            items[5].append({"point": x, "components": n})
    return AxiomReport(items)


# ---------------------------------------------------------------- orientations

class Orientations(list):
    """List of orientation assignments with an optional diagnostic."""

    diagnostic: str = ""


def orientations(p: PlanarPresentation, limit: int = 1 << 12) -> Orientations:
    """Edge orientations coherent through switches and regular points.

    An assignment maps edge id -> +1 (ports[0] to ports[1]) or -1. Charts
    through cyclic points are not required to be coherent (odd prongs carry
    no transverse orientation); the cyclic flags are checked against the
    branch orders instead.
    """
    ix = structure(p)
    out = Orientations()
    for ci, c in enumerate(p.cyclics):
        pos = c.positive()
        for s in p.switches:
            mem = s.members
            inter = [x for x in mem if x in set(pos)]
            if len(inter) == 2 and _successor(pos, inter[0]) != inter[1]:
                out.diagnostic = (f"cyclic {ci} side {c.side} disagrees with the order of "
                                  f"switch {s.id}")
                return out
    cyc = {x for c in p.cyclics for x in c.points}
    # Unknowns: each edge e has o(e); each switch s has d(s) = +1 when its
    # trunk runs into the hub. Constraints are parity links between them.
    links = {}

    def link(u, v, parity):
        links.setdefault(u, []).append((v, parity))
        links.setdefault(v, []).append((u, parity))

    for si, s in enumerate(p.switches):
        ei, end = ix.port_edge[s.trunk]
        # o(e) = +1 runs toward ports[1]; the trunk runs into the hub iff the
        # hub sits at end 1.
        link(("e", ei), ("s", si), 1 if end == 1 else -1)
        for x, port in s.branches:
            if port is None:
                continue
            ej, endj = ix.port_edge[port]
            # Going up through the switch continues away from x along ej.
            link(("e", ej), ("s", si), 1 if endj == 0 else -1)
    for x, occ in ix.member_of.items():
        if len(occ) == 2 and x not in cyc:
            link(("s", occ[0][0]), ("s", occ[1][0]), -1)
    nodes = [("e", i) for i in range(len(p.edges))] + [("s", i) for i in range(len(p.switches))]
    val, comps = {}, []
    for n in nodes:
        if n in val:
            continue
        val[n] = 1
        comp = [n]
        queue = deque([n])
        while queue:
            u = queue.popleft()
            for v, par in links.get(u, []):
                want = val[u] * par
                if v not in val:
                    val[v] = want
                    comp.append(v)
                    queue.append(v)
                elif val[v] != want:
                    out.diagnostic = f"incoherent orientation constraints at {v}"
                    return out
        comps.append(comp)
    if not p.edges:
        return out
    comps = [c for c in comps if any(n[0] == "e" for n in c)]
    for signs in itertools.product((1, -1), repeat=len(comps)):
        a = {}
        for sg, comp in zip(signs, comps):
            for n in comp:
                if n[0] == "e":
                    a[p.edges[n[1]].id] = val[n] * sg
        out.append(a)
        if len(out) >= limit:
            out.diagnostic = "truncated"
            break
    return out


# ---------------------------------------------------------------- isomorphism

@dataclass
class PresentationIsomorphism:
    points: dict
    edges: dict     # edge id -> (edge id, flipped)
    switches: dict

    def to_json(self):
        return {"points": self.points,
                "edges": {k: [v, f] for k, (v, f) in self.edges.items()},
                "switches": self.switches}

    def inverse(self):
        return PresentationIsomorphism({v: k for k, v in self.points.items()},
                                       {v: (k, f) for k, (v, f) in self.edges.items()},
                                       {v: k for k, v in self.switches.items()})


def _size(p):
    return len(p.points) + len(p.edges) + len(p.switches)


def _cyclic_key(c):
    return tuple(c.positive())


def _same_cycle(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    if a[0] not in b:
        return False
    k = b.index(a[0])
    return tuple(b[k:] + b[:k]) == tuple(a)


def _try(p1, ix1, p2, ix2, e1, e2, flip):
    pm, em, sm = {}, {}, {}
    queue = deque()

    def map_edge(a, b, f):
        if a in em:
            return em[a] == (b, f)
        if any(v[0] == b for v in em.values()):
            return False
        em[a] = (b, f)
        queue.append(("e", a))
        return True

    def map_switch(a, b):
        if a in sm:
            return sm[a] == b
        sm[a] = b
        queue.append(("s", a))
        return True

    def map_point(a, b):
        if a in pm:
            return pm[a] == b
        pm[a] = b
        queue.append(("p", a))
        return True

    if not map_edge(e1, e2, flip):
        return None
    while queue:
        kind, a = queue.popleft()
        if kind == "e":
            b, f = em[a]
            E1, E2 = p1.edges[a], p2.edges[b]
            if len(E1.samples) != len(E2.samples):
                return None
            s2 = E2.samples[::-1] if f else E2.samples
            for x, y in zip(E1.samples, s2):
                if not map_point(x, y):
                    return None
            for end in (0, 1):
                u1, u2 = ix1.end_user[(a, end)], ix2.end_user[(b, end ^ f)]
                if (u1 is None) != (u2 is None):
                    return None
                if u1 is None:
                    continue
                if u1[0] != u2[0]:
                    return None
                if u1[0] == "trunk":
                    if not map_switch(u1[1], u2[1]):
                        return None
                elif not map_point(u1[2], u2[2]):
                    return None
        elif kind == "s":
            b = sm[a]
            S1, S2 = p1.switches[a], p2.switches[b]
            if len(S1.branches) != len(S2.branches):
                return None
            for (x, _), (y, _) in zip(S1.branches, S2.branches):
                if not map_point(x, y):
                    return None
            ea, enda = ix1.port_edge[S1.trunk]
            eb, endb = ix2.port_edge[S2.trunk]
            if not map_edge(ea, eb, enda ^ endb):
                return None
        else:
            b = pm[a]
            if (a in ix1.sample_at) != (b in ix2.sample_at):
                return None
            if a in ix1.sample_at:
                # Samples are only reached from their (already mapped) edge.
                ea, ja = ix1.sample_at[a]
                eb, jb = ix2.sample_at[b]
                if ea not in em or em[ea][0] != eb:
                    return None
                n = len(p1.edges[ea].samples)
                if (n - 1 - ja if em[ea][1] else ja) != jb:
                    return None
                continue
            occ1, occ2 = ix1.member_of[a], ix2.member_of[b]
            if len(occ1) != len(occ2):
                return None
            if len(occ1) == 1:
                (sa, ka), (sb, kb) = occ1[0], occ2[0]
                if ka != kb or not map_switch(sa, sb):
                    return None
                pa = p1.switches[sa].branches[ka][1]
                pb = p2.switches[sb].branches[kb][1]
                ea, enda = ix1.port_edge[pa]
                eb, endb = ix2.port_edge[pb]
                if not map_edge(ea, eb, enda ^ endb):
                    return None
            else:
                chosen = None
                for t in (occ2, occ2[::-1]):
                    ok = all(k1 == k2 and (s1 not in sm or sm[s1] == s2)
                             for (s1, k1), (s2, k2) in zip(occ1, t))
                    if ok:
                        chosen = t
                        break
                if chosen is None:
                    return None
                for (s1, _), (s2, _) in zip(occ1, chosen):
                    if not map_switch(s1, s2):
                        return None
    if len(pm) != len(p1.points) or len(set(pm.values())) != len(pm):
        return None
    if len(em) != len(p1.edges) or len(sm) != len(p1.switches):
        return None
    if len(set(sm.values())) != len(sm):
        return None
    cyc2 = [_cyclic_key(c) for c in p2.cyclics]
    for c in p1.cyclics:
        img = tuple(pm[x] for x in c.positive())
        if not any(_same_cycle(img, k) for k in cyc2):
            return None
    return PresentationIsomorphism(
        {x: y for x, y in pm.items()},
        {p1.edges[a].id: (p2.edges[b].id, bool(f)) for a, (b, f) in em.items()},
        {p1.switches[a].id: p2.switches[b].id for a, b in sm.items()})


def _signature(p):
    return (len(p.points), len(p.edges), len(p.switches),
            sorted(len(c.points) for c in p.cyclics),
            sorted(len(e.samples) for e in p.edges),
            sorted(len(s.branches) for s in p.switches))


def isomorphic(p1, p2, bound: int = ISO_BOUND, all_witnesses: bool = False):
    """An isomorphism p1 -> p2 or None (every one if `all_witnesses`)."""
    if _size(p1) > bound or _size(p2) > bound:
        raise SizeExceeded(f"presentation size exceeds {bound}")
    ix1, ix2 = structure(p1), structure(p2)
    found = []
    if _signature(p1) != _signature(p2):
        return found if all_witnesses else None
    if not p1.edges:
        if p1.points or p2.points:  # pragma: no cover - edges exist whenever points do
            return found if all_witnesses else None
        iso = PresentationIsomorphism({}, {}, {})
        return [iso] if all_witnesses else iso
    e1 = 0
    for e2 in range(len(p2.edges)):
        for flip in (0, 1):
            iso = _try(p1, ix1, p2, ix2, e1, e2, flip)
            if iso is not None:
                if not all_witnesses:
                    return iso
                found.append(iso)
    return found if all_witnesses else None


def apply_iso(iso, p):
    """Relabel p's points by iso (used in tests)."""
    m = iso.points
    return PlanarPresentation(
        tuple(m[x] for x in p.points),
        tuple(Edge(e.id, e.ports, tuple(m[x] for x in e.samples)) for e in p.edges),
        tuple(Switch(s.id, s.trunk, tuple((m[x], q) for x, q in s.branches)) for s in p.switches),
        tuple(Cyclic(tuple(m[x] for x in c.points), c.side) for c in p.cyclics))

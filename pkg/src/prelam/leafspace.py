"""The singular planar structure Leaf*(L) of an annotated lamination.

Points are plain leaves and star separatrices. Each shell gives a switch
whose trunk runs into the accumulation beyond the root and whose branches
follow the boundary order. Each star edge facing an accumulation face gives
a two-point switch of consecutive separatrices. Chains of strips and
arc-gaps become edges; plain leaves inside a chain are its samples.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .circle import Chord, ccw
from .errors import NotMonotone, NotOnShell, NotShellStar
from .lamination import IN, OUT, Decomposition, other_side, validate
from .planar import Cyclic, Edge, PlanarPresentation, Switch


@dataclass(frozen=True)
class Plain:
    chord: Chord


@dataclass(frozen=True)
class Separatrix:
    star: int
    pair: tuple  # (i, i+1 mod k): indices of adjacent polygon edges


def plain_id(idx):
    return f"L{idx}"


def sep_id(j, i, k):
    return f"S{j}:{i}-{(i + 1) % k}"


def parse_point(al, pid):
    if pid.startswith("L"):
        return Plain(al.leaves[int(pid[1:])])
    j, pair = pid[1:].split(":")
    a, b = pair.split("-")
    return Separatrix(int(j), (int(a), int(b)))


def point_id(al, x):
    if isinstance(x, str):
        return x
    if isinstance(x, Plain):
        return plain_id(al.leaves.index(x.chord))
    k = len(al.stars[x.star].polygon)
    return sep_id(x.star, x.pair[0], k)


def _star_edges(al):
    out = {}
    for j, s in enumerate(al.stars):
        for i, e in enumerate(s.polygon):
            out.setdefault(e, (j, i))
    return out


def _expand(al, star_edges, chord):
    """Leaf-space points standing for a boundary chord, in branch order."""
    if chord in star_edges:
        j, i = star_edges[chord]
        k = len(al.stars[j].polygon)
        return [sep_id(j, (i - 1) % k, k), sep_id(j, i, k)]
    return [plain_id(al.leaves.index(chord))]


def shell_members(al, i):
    se = _star_edges(al)
    out = []
    for c in al.shells[i].boundary:
        out.extend(_expand(al, se, c))
    return out


class _Builder:
    def __init__(self, al):
        self.al = al
        validate(al)
        self.d = Decomposition(al)
        self.se = _star_edges(al)
        for f in self.d.faces:
            if self.d.classify_face(f) == "unannotated-polygon":
                raise NotShellStar("unannotated region",
                                   witness={"region": [c.to_json() for c in f.chords]})
        if al.virtual:
            raise NotShellStar("virtual chords present; complete first")
        seen = {}
        for j, s in enumerate(al.stars):
            for e in s.polygon:
                if e in seen:
                    raise NotShellStar(f"leaf {e} bounds two stars", witness={"chord": e.to_json()})
                seen[e] = j
        self.leaf_idx = {c: i for i, c in enumerate(al.leaves)}
        self.edges = []
        self.done = set()   # (chord, side) halves already consumed by a chain

    def face_class(self, c, side):
        return self.d.classify_face(self.d.index[(c, side)])

    def open_side(self, c, side):
        return self.face_class(c, side) in ("arc-gap", "strip")

    def is_sample(self, c):
        return (self.d.kinds[c] == "leaf" and c not in self.se
                and self.open_side(c, IN) and self.open_side(c, OUT))

    def walk(self, c, side):
        """Follow a chain from chord c into its face on `side`."""
        samples = []
        while True:
            self.done.add((c, side))
            f = self.d.index[(c, side)]
            if len(f.sides) == 1:
                return samples, None
            (c2, s2), = [(x, s) for x, s in f.sides if x != c]
            if self.is_sample(c2):
                samples.append(plain_id(self.leaf_idx[c2]))
                self.done.add((c2, s2))
                c, side = c2, other_side(s2)
                continue
            self.done.add((c2, s2))
            return samples, (c2, s2)

    def new_edge(self, samples, start_open, end_open):
        eid = f"e{len(self.edges)}"
        ports = (None if start_open else f"{eid}.0", None if end_open else f"{eid}.1")
        self.edges.append(Edge(eid, ports, tuple(samples)))
        return ports

    def chain_from(self, c, side):
        """Edge leaving chord c on `side`; returns the port at c and records
        the attachment at the far end."""
        samples, end = self.walk(c, side)
        ports = self.new_edge(samples, False, end is None)
        if end is not None:
            self.pending[end] = ports[1]
        return ports[0]

    def port_for(self, c, side):
        if (c, side) in self.pending:
            return self.pending.pop((c, side))
        return self.chain_from(c, side)

    def build(self):
        al, d = self.al, self.d
        self.pending = {}
        switches = []
        attach = []  # (chord, open side) at which a switch or member needs an edge
        for i, s in enumerate(al.shells):
            beyond = d.shell_face(s)
            side = IN if any(x == s.root and t == IN for x, t in beyond.sides) else OUT
            attach.append(("shell", i, s.root, other_side(side)))
        for j, s in enumerate(al.stars):
            sf = d.star_face(s)
            for i, e in enumerate(s.polygon):
                star_side = IN if (e, IN) in [(x, t) for x, t in sf.sides] else OUT
                out = other_side(star_side)
                if self.open_side(e, out):
                    attach.append(("star", (j, i), e, out))
        trunk = {}
        for kind, who, c, side in attach:
            trunk[(kind, who)] = self.port_for(c, side)
        for i, s in enumerate(al.shells):
            branches = []
            for c in s.boundary:
                for x in _expand(al, self.se, c):
                    port = None
                    if c not in self.se:
                        face_side = IN if (c, IN) in [(y, t) for y, t in d.shell_face(s).sides] else OUT
                        far = other_side(face_side)
                        if self.open_side(c, far):
                            port = self.port_for(c, far)
                    branches.append((x, port))
            switches.append(Switch(f"sh{i}", trunk[("shell", i)], tuple(branches)))
        for j, s in enumerate(al.stars):
            k = len(s.polygon)
            for i in range(k):
                if ("star", (j, i)) in trunk:
                    members = ((sep_id(j, (i - 1) % k, k), None), (sep_id(j, i, k), None))
                    switches.append(Switch(f"st{j}:{i}", trunk[("star", (j, i))], members))
        # Chains with two open ends: plain leaves that no attachment reached.
        for c in al.leaves:
            if self.is_sample(c) and (c, IN) not in self.done and (c, OUT) not in self.done:
                back, _ = self.walk(c, OUT)
                fwd, _ = self.walk(c, IN)
                samples = back[::-1] + [plain_id(self.leaf_idx[c])] + fwd
                self.new_edge(samples, True, True)
        assert not self.pending, self.pending
        points = []
        for c in al.leaves:
            if c not in self.se:
                points.append(plain_id(self.leaf_idx[c]))
        cyclics = []
        for j, s in enumerate(al.stars):
            k = len(s.polygon)
            ids = [sep_id(j, i, k) for i in range(k)]
            points.extend(ids)
            cyclics.append(Cyclic(tuple(ids), "L"))
        return PlanarPresentation(tuple(points), tuple(self.edges), tuple(switches), tuple(cyclics))


def build_leaf_space(al) -> PlanarPresentation:
    return _Builder(al).build()


def branch_compare(al, shell_id: int, x, y) -> int:
    members = shell_members(al, shell_id)
    xi, yi = point_id(al, x), point_id(al, y)
    for z in (xi, yi):
        if z not in members:
            raise NotOnShell(f"{z} does not bound shell {shell_id}")
    a, b = members.index(xi), members.index(yi)
    return (a > b) - (a < b)


# ---------------------------------------------------------------- circle map

def _chord_map(iso, L1, L2):
    cm = {}

    def put(c1, c2):
        if cm.setdefault(c1, c2) != c2:
            raise NotMonotone(f"leaf {c1} has two images")

    for x, y in iso.points.items():
        a, b = parse_point(L1, x), parse_point(L2, y)
        if type(a) is not type(b):
            raise NotMonotone(f"{x} and {y} are of different kinds")
        if isinstance(a, Plain):
            put(a.chord, b.chord)
        else:
            s1, s2 = L1.stars[a.star].polygon, L2.stars[b.star].polygon
            put(s1[a.pair[0]], s2[b.pair[0]])
            put(s1[a.pair[1]], s2[b.pair[1]])
    return cm


class _CyclicMap:
    """Incrementally built injective, cyclically monotone point map."""

    def __init__(self):
        self.dom = []
        self.img = {}

    def copy(self):
        m = _CyclicMap()
        m.dom = list(self.dom)
        m.img = dict(self.img)
        return m

    def add(self, x, y) -> bool:
        if x in self.img:
            return self.img[x] == y
        if y in self.img.values():
            return False
        if len(self.dom) >= 2:
            k = bisect.bisect(self.dom, x)
            pred, succ = self.dom[k - 1], self.dom[k % len(self.dom)]
            hp, hs = self.img[pred], self.img[succ]
            if not (0 < ccw(hp, y) < ccw(hp, hs)):
                return False
        elif len(self.dom) == 1 and self.dom[0] == x:
            return False
        bisect.insort(self.dom, x)
        self.img[x] = y
        return True


def induced_circle_map(iso, L1, L2) -> dict:
    """Endpoint map induced by a leaf-space isomorphism."""
    cm = _chord_map(iso, L1, L2)
    chords = sorted(cm)
    if not chords:
        return {}
    first = chords[0]
    for pairing in (0, 1):
        m = _CyclicMap()
        c2 = cm[first]
        ends2 = c2.endpoints() if pairing == 0 else c2.endpoints()[::-1]
        ok = all(m.add(x, y) for x, y in zip(first.endpoints(), ends2))
        for c in chords[1:]:
            if not ok:
                break
            img = cm[c].endpoints()
            for cand in (img, img[::-1]):
                trial = m.copy()
                if all(trial.add(x, y) for x, y in zip(c.endpoints(), cand)):
                    m = trial
                    break
            else:
                ok = False
        if ok:
            return dict(m.img)
    raise NotMonotone("no orientation-coherent pairing of endpoints",
                      witness={"first": first.to_json()})

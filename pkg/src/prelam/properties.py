"""Property checks on annotated laminations and their aggregation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .circle import Arc, ccw, fmt, minor_arc_gap
from .lamination import Decomposition, validate

PROPERTIES = ("density", "countability", "coverage", "star-uniqueness",
              "no-bad-accumulation", "few-common-ends")


@dataclass
class Verdict:
    passed: bool
    witnesses: list = field(default_factory=list)
    note: str = ""

    def to_json(self):
        d = {"pass": self.passed, "witnesses": self.witnesses}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class PropertyReport:
    verdicts: dict

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def failing(self):
        return [k for k, v in self.verdicts.items() if not v.passed]

    def to_json(self):
        return {"pass": self.passed,
                "verdicts": {k: v.to_json() for k, v in self.verdicts.items()}}


def _chord_json(c):
    return c.to_json()


def leaf_endpoints(al):
    return sorted({x for c in al.leaves for x in c.endpoints()})


def check_density(al, eps) -> Verdict:
    """Every arc of length >= eps contains a leaf endpoint."""
    eps = Fraction(eps)
    pts = leaf_endpoints(al)
    if not pts:
        return Verdict(False, [{"arc": ["0/1", "0/1"], "length": "1/1"}])
    bad = []
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        g = ccw(p, q) or Fraction(1)
        if g >= eps:
            bad.append({"arc": [fmt(p), fmt(q)], "length": fmt(g)})
    return Verdict(not bad, bad)


def check_countability(al) -> Verdict:
    # Finite data: every circle point ends finitely many leaves.
    return Verdict(True, [], "finite chord system")


def check_coverage(al, eps=None, decomposition=None) -> Verdict:
    d = decomposition or Decomposition(al, eps)
    bad = []
    for f in d.faces:
        if d.classify_face(f) == "unannotated-polygon":
            bad.append({"region": [_chord_json(c) for c in f.chords]})
    return Verdict(not bad, bad)


def check_star_uniqueness(al) -> Verdict:
    seen, bad = {}, []
    for j, s in enumerate(al.stars):
        for e in s.polygon:
            if e in seen and seen[e] != j:
                bad.append({"chord": e.to_json(), "stars": [seen[e], j]})
            seen.setdefault(e, j)
    return Verdict(not bad, bad)


def _two_longest_hold_shell(s) -> bool:
    gaps = sorted((minor_arc_gap(c) for c in (s.root, *s.boundary)), reverse=True)
    second = gaps[1] if len(gaps) > 1 else gaps[0]
    return minor_arc_gap(s.root) >= second


def _two_longest_hold_star(s) -> bool:
    gaps = [minor_arc_gap(e) for e in s.polygon]
    top = sorted(gaps, reverse=True)
    g1, g2 = top[0], top[1]
    k = len(gaps)
    for i in range(k):
        x, y = gaps[i], gaps[(i + 1) % k]
        if max(x, y) == g1 and min(x, y) == g2:
            return True
    return False


def shell_violates(s, delta) -> bool:
    gmax = max(minor_arc_gap(c) for c in (s.root, *s.boundary))
    return gmax > delta and not _two_longest_hold_shell(s)


def star_violates(s, delta) -> bool:
    gmax = max(minor_arc_gap(e) for e in s.polygon)
    return gmax > delta and not _two_longest_hold_star(s)


def check_no_bad_accumulation(al, delta) -> Verdict:
    """Long shells keep their root among the two longest sides and long
    stars keep their two longest edges adjacent, up to the budget.

    Ties are read leniently: a root tied with the second longest side, or
    an adjacent pair realising the two largest gaps, is accepted.
    """
    delta = Fraction(delta)
    bad = []
    for i, s in enumerate(al.shells):
        if shell_violates(s, delta):
            bad.append({"shell": i, "root": s.root.to_json(),
                        "root_gap": fmt(minor_arc_gap(s.root)),
                        "max_boundary_gap": fmt(max(minor_arc_gap(c) for c in s.boundary))})
    for j, s in enumerate(al.stars):
        if star_violates(s, delta):
            bad.append({"star": j, "gaps": [fmt(minor_arc_gap(e)) for e in s.polygon]})
    return Verdict(len(bad) <= al.exceptions, bad,
                   f"{len(bad)} violation(s), budget {al.exceptions}")


def _ends(al):
    groups = {}
    for c in al.leaves:
        for x in c.endpoints():
            groups.setdefault(x, []).append(c)
    return groups


def check_few_common_ends(al) -> Verdict:
    succ_shell = {}
    for i, s in enumerate(al.shells):
        for f, g in zip(s.boundary, s.boundary[1:]):
            succ_shell[frozenset((f, g))] = i
    star_pairs = {}
    for j, s in enumerate(al.stars):
        k = len(s.polygon)
        for i in range(k):
            star_pairs[frozenset((s.polygon[i], s.polygon[(i + 1) % k]))] = j
    bad = []
    for theta, group in sorted(_ends(al).items()):
        if len(group) < 2:
            continue
        group = sorted(group, key=lambda c: ccw(theta, c.other(theta)))
        for f, g in zip(group, group[1:]):
            key = frozenset((f, g))
            if key not in succ_shell and key not in star_pairs:
                bad.append({"theta": fmt(theta), "pair": [f.to_json(), g.to_json()],
                            "reason": "successive leaves neither co-shell nor a separatrix"})
        for i, s in enumerate(al.shells):
            n = sum(1 for c in group if c in set(s.boundary))
            if n > 2:
                bad.append({"theta": fmt(theta), "shell": i,
                            "reason": "at most 2 boundary components of a shell"})
        for j, s in enumerate(al.stars):
            n = sum(1 for c in group if c in set(s.polygon))
            if n > 2:
                bad.append({"theta": fmt(theta), "star": j,
                            "reason": "at most one separatrix of a star"})
    return Verdict(not bad, bad)


def classify(al, eps, delta) -> PropertyReport:
    eps = Fraction(eps)
    d = validate(al)
    d = Decomposition(al, eps)
    return PropertyReport({
        "density": check_density(al, eps),
        "countability": check_countability(al),
        "coverage": check_coverage(al, eps, d),
        "star-uniqueness": check_star_uniqueness(al),
        "no-bad-accumulation": check_no_bad_accumulation(al, delta),
        "few-common-ends": check_few_common_ends(al),
    })


# ---------------------------------------------------------------- witnesses

def replay_witness(al, prop, w, eps=None, delta=None) -> bool:
    """True iff the witness still exhibits a failure of `prop` on `al`."""
    from .circle import Chord
    if prop == "density":
        a, b = Fraction(w["arc"][0]), Fraction(w["arc"][1])
        arc = Arc(a, b)
        if arc.length < Fraction(eps):
            return False
        return not any(arc.contains(x) for x in leaf_endpoints(al))
    if prop == "coverage":
        region = {Chord.from_json(c) for c in w["region"]}
        d = Decomposition(al, eps)
        return any(set(f.chords) == region and d.classify_face(f) == "unannotated-polygon"
                   for f in d.faces)
    if prop == "star-uniqueness":
        c = Chord.from_json(w["chord"])
        return sum(1 for s in al.stars if c in s.polygon) >= 2
    if prop == "no-bad-accumulation":
        if "shell" in w:
            return shell_violates(al.shells[w["shell"]], Fraction(delta))
        return star_violates(al.stars[w["star"]], Fraction(delta))
    if prop == "few-common-ends":
        v = check_few_common_ends(al)
        return w in v.witnesses
    raise ValueError(prop)

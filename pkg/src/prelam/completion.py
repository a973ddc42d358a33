"""Completing a raw lamination into shells, and transversal intervals."""

from __future__ import annotations

from .circle import Chord, minor_arc_gap, separates
from .errors import EmptyInterval, EndpointCollision, PreconditionViolated
from .lamination import (AnnotatedLamination, Decomposition, FiniteLamination,
                         RawAnnotatedLamination, ShellSpec, validate)


def _exclusion_key(c: Chord):
    # Largest gap first, then the lexicographically smallest endpoint pair.
    return (-minor_arc_gap(c), c.a, c.b)


def _ordered_boundary(root, chords):
    s = ShellSpec(root, tuple(chords))
    return tuple(sorted(chords, key=s.first_endpoint_key))


def complete(raw: RawAnnotatedLamination) -> AnnotatedLamination:
    d = Decomposition(raw)
    virtual = set(raw.virtual)
    open_faces = [f for f in d.faces
                  if d.claim_of(f) is None and len(f.sides) >= 2 and not d.is_thin(f)]

    bordering = {v: [] for v in virtual}
    for f in open_faces:
        for c in f.chords:
            if c in virtual:
                bordering[c].append(f)

    promoted = {v for v, fs in bordering.items() if not fs}
    new_shells = []
    roots = set()
    for f in open_faces:
        vs = [c for c in f.chords if c in virtual]
        region = [c.to_json() for c in f.chords]
        if not vs:
            raise PreconditionViolated("region without a virtual boundary component",
                                       witness={"region": region})
        bad = [c for c in f.chords if d.kinds[c] == "root"]
        if bad:
            raise PreconditionViolated("region bounded by the far side of a root",
                                       witness={"region": region, "root": bad[0].to_json()})
        root = min(vs, key=_exclusion_key)
        roots.add(root)
        promoted.update(v for v in vs if v != root)
        boundary = _ordered_boundary(root, [c for c in f.chords if c != root])
        new_shells.append(ShellSpec(root, boundary))
    clash = roots & promoted
    if clash or any(len(bordering[r]) > 1 for r in roots):
        c = sorted(clash or [r for r in roots if len(bordering[r]) > 1])[0]
        raise PreconditionViolated("virtual chord bounds two regions", witness={"chord": c.to_json()})

    out = AnnotatedLamination(
        FiniteLamination(tuple(raw.leaves) + tuple(sorted(promoted))),
        tuple(raw.shells) + tuple(new_shells), raw.stars, raw.exceptions, raw.resolution)
    validate(out)
    return out


def raw_form(al: AnnotatedLamination) -> RawAnnotatedLamination:
    """Forget the shells, keeping their roots as virtual chords."""
    return RawAnnotatedLamination(al.base, (), al.stars, al.exceptions, al.resolution,
                                  tuple(s.root for s in al.shells))


def interval_along(al, t: Chord, start=None) -> list:
    """Leaves crossed by t, ordered from `start` (default t.a) to the other end."""
    start = t.a if start is None else start
    for c in al.leaves:
        if c.has_endpoint(t.a) or c.has_endpoint(t.b):
            raise EndpointCollision(f"transversal {t} shares an endpoint with {c}")
    crossed = [c for c in al.leaves if separates(c, t.a, t.b)]
    if not crossed:
        raise EmptyInterval(f"{t} crosses no leaf")

    def depth(c):
        # Number of crossed leaves lying between `start` and c.
        return sum(1 for g in crossed if g != c and
                   all(separates(g, start, y) for y in c.endpoints() if not g.has_endpoint(y)))

    return sorted(crossed, key=depth)

"""Reidemeister rewriting with consistent recoloring.

Moves operate on unoriented diagrams and return a new diagram plus a
replayable MoveRecord.  Recoloring re-solves the coloring with every
untouched arc pinned, which both computes the unique extension and checks
it exists; counts of colorings are preserved by all three move types, which
the test suite exercises directly.

The transport routine repeatedly pushes a chosen arc across faces (always
passing over the obstructions, so the mover keeps its color) along a
breadth-first shortest path in the face-adjacency graph until a descendant
segment shares a face with the destination arc.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colorings import FoxColoring, QuandleColoring, fox_solution_space, quandle_colorings
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    OrientationError,
    co_facial,
    faces,
    max_label,
    validate,
)

__all__ = [
    "MoveError",
    "MoveRecord",
    "TransportResult",
    "apply_r1",
    "apply_r2_over",
    "apply_r3",
    "find_r3_triangles",
    "r2_transport",
    "recolor_after_move",
    "records_to_json",
    "undo_move",
]

_CAP = -1


class MoveError(DiagramError):
    pass


@dataclass(frozen=True)
class MoveRecord:
    """Enough data to recolor, undo, and serialize one move."""

    kind: str  # 'R1+', 'R1-', 'R2+', 'R2-', 'R3'
    site: tuple = ()
    fresh: tuple[int, ...] = ()
    added: tuple[int, ...] = ()  # indices of crossings appended to the diagram
    replaced: tuple[tuple[int, int, int, int], ...] = ()  # (vertex, slot, old, new)
    removed_circle: int | None = None
    triangle: tuple = ()  # R3: (crossing indices, old records, new records)

    def changed_labels(self) -> frozenset[int]:
        if self.kind == "R3":
            return frozenset(self.site[1])
        return frozenset(self.fresh)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "site": list(self.site)}
        if self.fresh:
            out["fresh"] = list(self.fresh)
        return out


def records_to_json(records) -> list[dict]:
    return [r.to_json() for r in records]


def _require_unoriented(d: Diagram) -> None:
    if d.oriented:
        raise OrientationError("moves operate on unoriented diagrams")


def _occurrences_of(d: Diagram, label: int):
    occ = []
    for ci, c in enumerate(d.crossings):
        for si, s in enumerate(c.slots):
            if s == label:
                occ.append((ci, si))
    for bi, s in enumerate(d.boundary):
        if s == label:
            occ.append((_CAP, bi))
    return occ


def _replace_at(d: Diagram, spots) -> Diagram:
    """Substitute labels at specific (vertex, slot, old, new) positions."""
    crossings = [list(c.slots) for c in d.crossings]
    boundary = list(d.boundary)
    for v, s, old, new in spots:
        if v == _CAP:
            assert boundary[s] == old
            boundary[s] = new
        else:
            assert crossings[v][s] == old
            crossings[v][s] = new
    return Diagram(
        tuple(Crossing(tuple(slots), c.sign) for slots, c in zip(crossings, d.crossings)),
        d.circles,
        tuple(boundary),
    )


# ---------------------------------------------------------------------------
# R1


def apply_r1(d: Diagram, arc: int, positive: bool = True) -> tuple[Diagram, MoveRecord]:
    """Add a kink on an arc (or circle); `positive` picks the curl side."""
    _require_unoriented(d)
    if arc in d.circles:
        loop = max_label(d) + 1
        slots = (arc, loop, loop, arc) if positive else (arc, arc, loop, loop)
        crossings = d.crossings + (Crossing(slots),)
        out = Diagram(crossings, tuple(k for k in d.circles if k != arc), d.boundary)
        validate(out)
        rec = MoveRecord(
            "R1+", ("arc", arc), fresh=(loop,), added=(len(d.crossings),), removed_circle=arc
        )
        return out, rec
    occ = _occurrences_of(d, arc)
    if not occ:
        raise MoveError(f"unknown arc {arc}")
    tail = max(occ)  # split at the later occurrence; deterministic
    loop, new = max_label(d) + 1, max_label(d) + 2
    slots = (arc, loop, loop, new) if positive else (arc, new, loop, loop)
    replaced = ((tail[0], tail[1], arc, new),)
    base = _replace_at(d, replaced)
    out = Diagram(base.crossings + (Crossing(slots),), base.circles, base.boundary)
    validate(out)
    rec = MoveRecord(
        "R1+", ("arc", arc), fresh=(loop, new), added=(len(d.crossings),), replaced=replaced
    )
    return out, rec


# ---------------------------------------------------------------------------
# R2


def apply_r2_over(d: Diagram, mover: int, target: int) -> tuple[Diagram, MoveRecord]:
    """Push `mover` over `target` across a shared face: two new crossings.

    The mover splits into three arcs keeping its label nearest the chosen
    face dart; the middle segment lands in the face beyond the target.
    """
    _require_unoriented(d)
    if not co_facial(d, mover, target):
        raise MoveError(f"arcs {mover} and {target} are not co-facial")
    shared = None
    for f in faces(d):
        if mover in f.arcs and target in f.arcs and f.corners:
            shared = f
            break
    if shared is None:
        raise MoveError(f"arcs {mover} and {target} only share a degenerate face")
    occ_m = _occurrences_of(d, mover)
    occ_t = _occurrences_of(d, target)
    # darts of the shared face, in orbit order, identify which ends stay put
    orbit = _face_orbit_darts(d, shared.index)
    dart_m = next(dt for dt in orbit if dt in occ_m)
    dart_t = next(dt for dt in orbit if dt in occ_t)
    far_m = next(p for p in occ_m if p != dart_m)
    far_t = next(p for p in occ_t if p != dart_t)
    lab = max_label(d)
    m_mid, m_far, t_mid, t_far = lab + 1, lab + 2, lab + 3, lab + 4
    replaced = (
        (far_m[0], far_m[1], mover, m_far),
        (far_t[0], far_t[1], target, t_far),
    )
    base = _replace_at(d, replaced)
    y1 = Crossing((target, m_far, t_mid, m_mid))
    y2 = Crossing((t_mid, mover, t_far, m_mid))
    out = Diagram(base.crossings + (y1, y2), base.circles, base.boundary)
    validate(out)
    rec = MoveRecord(
        "R2+",
        ("arcs", mover, target),
        fresh=(m_mid, m_far, t_mid, t_far),
        added=(len(d.crossings), len(d.crossings) + 1),
        replaced=replaced,
    )
    return out, rec


def _face_orbit_darts(d: Diagram, face_index: int):
    from .diagram import _face_orbits

    orbits = _face_orbits(d)
    return orbits[face_index]


# ---------------------------------------------------------------------------
# R3


def find_r3_triangles(d: Diagram) -> list[int]:
    """Faces where a triangle slide applies: three distinct crossings and
    sides, with one side passing over (or under) at both of its corners."""
    out = []
    for f in faces(d):
        if len(f.corners) != 3:
            continue
        orbit = _face_orbit_darts(d, f.index)
        if any(v == _CAP for v, _ in orbit):
            continue
        (P, p), (Q, q), (R, r) = orbit
        if len({P, Q, R}) != 3:
            continue
        x = d.crossings[P].slots[p]
        y = d.crossings[Q].slots[q]
        z = d.crossings[R].slots[r]
        if len({x, y, z}) != 3:
            continue
        over_x = (p % 2 == 1) + (q % 2 == 0)
        over_y = (q % 2 == 1) + (r % 2 == 0)
        over_z = (r % 2 == 1) + (p % 2 == 0)
        if 2 in (over_x, over_y, over_z):
            out.append(f.index)
    return out


def apply_r3(d: Diagram, face_index: int) -> tuple[Diagram, MoveRecord]:
    """Slide the uniform side of a triangular face across the opposite crossing.

    The three crossings keep their strand pairs and over/under data; only
    the cyclic positions of the triangle's sides change.
    """
    _require_unoriented(d)
    if face_index not in find_r3_triangles(d):
        raise MoveError(f"face {face_index} does not admit a triangle slide")
    orbit = _face_orbit_darts(d, face_index)
    (P, p), (Q, q), (R, r) = orbit
    sl = lambda ci, k: d.crossings[ci].slots[k % 4]
    x, y, z = sl(P, p), sl(Q, q), sl(R, r)
    a_in, c_out = sl(P, p + 2), sl(P, p + 1)
    a_out, b_in = sl(Q, q + 1), sl(Q, q + 2)
    b_out, c_in = sl(R, r + 1), sl(R, r + 2)

    def orientate(tuple4, first_pair_under):
        # rotate by one so the under pair sits at slots 0/2
        return tuple4 if first_pair_under else (tuple4[3], tuple4[0], tuple4[1], tuple4[2])

    # the slide reverses the order in which each strand meets its two
    # crossings, so the external edge on the far side attaches first
    new_P = Crossing(orientate((a_out, z, x, c_in), p % 2 == 0))
    new_Q = Crossing(orientate((x, y, a_in, b_out), q % 2 == 1))
    new_R = Crossing(orientate((b_in, c_out, y, z), r % 2 == 1))
    crossings = list(d.crossings)
    old = (crossings[P], crossings[Q], crossings[R])
    crossings[P], crossings[Q], crossings[R] = new_P, new_Q, new_R
    out = Diagram(tuple(crossings), d.circles, d.boundary)
    validate(out)
    rec = MoveRecord(
        "R3",
        ("face", (x, y, z)),
        triangle=((P, Q, R), old, (new_P, new_Q, new_R)),
    )
    return out, rec


# ---------------------------------------------------------------------------
# undo


def undo_move(d: Diagram, rec: MoveRecord) -> tuple[Diagram, MoveRecord]:
    """Invert a move applied to produce d; returns the restored diagram."""
    if rec.kind == "R3":
        (P, Q, R), old, _ = rec.triangle
        crossings = list(d.crossings)
        crossings[P], crossings[Q], crossings[R] = old
        out = Diagram(tuple(crossings), d.circles, d.boundary)
        validate(out)
        return out, MoveRecord("R3", rec.site, triangle=((P, Q, R), _, old))
    if rec.kind in ("R1+", "R2+"):
        keep = [c for i, c in enumerate(d.crossings) if i not in rec.added]
        base = Diagram(tuple(keep), d.circles, d.boundary)
        undone = _replace_at(base, tuple((v, s, new, old) for v, s, old, new in rec.replaced))
        circles = undone.circles
        if rec.removed_circle is not None:
            circles = circles + (rec.removed_circle,)
        out = Diagram(undone.crossings, circles, undone.boundary)
        validate(out)
        inverse = MoveRecord(
            "R1-" if rec.kind == "R1+" else "R2-", rec.site, fresh=rec.fresh
        )
        return out, inverse
    raise MoveError(f"cannot undo a {rec.kind} record")


# ---------------------------------------------------------------------------
# recoloring


def recolor_after_move(coloring, rec: MoveRecord, before: Diagram, after: Diagram):
    """The unique coloring of `after` agreeing with the old one off the move site."""
    changed = rec.changed_labels()
    surviving = after.arcs()
    pins = {
        label: value
        for label, value in coloring.colors.items()
        if label in surviving and label not in changed
    }
    if isinstance(coloring, FoxColoring):
        space = fox_solution_space(after, coloring.modulus, pins)
        if space.count != 1:
            raise MoveError(f"recoloring is not unique ({space.count} extensions)")
        return next(space.colorings())
    if isinstance(coloring, QuandleColoring):
        search = quandle_colorings(after, coloring.quandle, pins)
        if len(search.colorings) != 1:
            raise MoveError(
                f"recoloring is not unique ({len(search.colorings)} extensions)"
            )
        return search.colorings[0]
    raise MoveError(f"cannot recolor a {type(coloring).__name__}")


# ---------------------------------------------------------------------------
# transport


@dataclass
class TransportResult:
    diagram: Diagram
    coloring: object
    segment: int
    records: list[MoveRecord] = field(default_factory=list)


def _first_step_arc(d: Diagram, mover: int, dest: int) -> int:
    """BFS over the face-adjacency graph; the arc to cross first, or raise."""
    fs = faces(d)
    arc_to_faces: dict[int, list[int]] = {}
    for f in fs:
        for a in f.arcs:
            arc_to_faces.setdefault(a, []).append(f.index)
    sources = sorted(f.index for f in fs if mover in f.arcs)
    targets = {f.index for f in fs if dest in f.arcs}
    prev: dict[int, tuple[int, int] | None] = {f: None for f in sources}
    queue = list(sources)
    goal = None
    while queue:
        fi = queue.pop(0)
        if fi in targets:
            goal = fi
            break
        crossable = sorted(a for a in fs[fi].arcs if a != mover)
        for a in crossable:
            for nf in sorted(arc_to_faces[a]):
                if nf not in prev:
                    prev[nf] = (fi, a)
                    queue.append(nf)
    if goal is None:
        raise MoveError(f"no face path from arc {mover} to arc {dest}")
    step = None
    fi = goal
    while prev[fi] is not None:
        fi, arc = prev[fi]
        step = arc
    if step is None:
        raise MoveError("arcs are already co-facial")
    return step


def r2_transport(d: Diagram, coloring, source: int, dest: int) -> TransportResult:
    """Bring a descendant segment of `source` into a face shared with `dest`.

    Each step pushes the current segment over the next arc on a shortest
    face path, recoloring as it goes; the mover passes over everything, so
    the returned segment keeps the source's color.
    """
    if source == dest:
        raise MoveError("source and destination must differ")
    records: list[MoveRecord] = []
    mover = source
    while not co_facial(d, mover, dest):
        target = _first_step_arc(d, mover, dest)
        d2, rec = apply_r2_over(d, mover, target)
        coloring = recolor_after_move(coloring, rec, d, d2)
        d = d2
        records.append(rec)
        mover = rec.fresh[0]  # the middle segment, now one face closer
    return TransportResult(d, coloring, mover, records)

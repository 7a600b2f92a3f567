"""Planar diagram (PD) codes for knot, link, and tangle diagrams.

Text format (UTF-8, whitespace separated, one record per ';' or newline,
'#' starts a comment running to end of line):

    X a b c d      unoriented crossing; arc labels counterclockwise starting
                   at the incoming under-strand, so slots 0/2 are the under
                   pair and slots 1/3 the over pair
    Xp a b c d     positive crossing (oriented diagrams)
    Xm a b c d     negative crossing
    B e1 e2 e3 e4  tangle boundary endpoints in NW, NE, SE, SW order
    B e1 e2        1-tangle boundary
    O k            crossing-free circle component

Arc labels are arbitrary positive integers, not required to be consecutive
(rewriting operations mint fresh labels without renumbering).  A closed
diagram uses every label exactly twice across crossing slots.  A tangle
endpoint label occurs once in a crossing slot and once in the boundary
record; a crossing-free open strand is listed twice in the boundary record
and nowhere else.

Faces come from the rotation system: darts (crossing, slot) walk the
next-corner permutation, with tangle boundaries capped by a virtual vertex.
Planarity is enforced by the per-component Euler count V - E + F = 2, not
by an embedding search; a rotation system that fails Euler is rejected as
an inconsistent code.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Base class for malformed or inconsistent diagrams."""


class PDSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ArcOccurrenceError(DiagramError):
    pass


class PlanarityError(DiagramError):
    pass


class OrientationError(DiagramError):
    pass


@dataclass(frozen=True)
class Crossing:
    """One crossing: slots counterclockwise from the incoming under-strand.

    sign is +1/-1 for oriented diagrams and 0 when unset.
    """

    slots: tuple[int, int, int, int]
    sign: int = 0


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    circles: tuple[int, ...] = ()
    boundary: tuple[int, ...] = ()

    @property
    def oriented(self) -> bool:
        return bool(self.crossings) and all(c.sign != 0 for c in self.crossings)

    @property
    def is_tangle(self) -> bool:
        return len(self.boundary) > 0

    @property
    def endpoints(self) -> tuple[int, ...]:
        return self.boundary

    def arcs(self) -> frozenset[int]:
        labels = set()
        for c in self.crossings:
            labels.update(c.slots)
        labels.update(self.circles)
        labels.update(self.boundary)
        return frozenset(labels)


@dataclass(frozen=True)
class Face:
    """A complementary region: its crossing corners and incident arcs."""

    index: int
    corners: tuple[tuple[int, int], ...]
    arcs: frozenset[int] = field(default_factory=frozenset)


# ---------------------------------------------------------------------------
# parsing / serialization


def _int_token(tok: str, lineno: int, col: int) -> int:
    if not tok.isdigit() or int(tok) <= 0:
        raise PDSyntaxError(f"expected a positive integer, got {tok!r}", lineno, col)
    return int(tok)


def _parse_text(text: str):
    crossings: list[Crossing] = []
    circles: list[int] = []
    boundary: tuple[int, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 1
        for segment in line.split(";"):
            tokens = segment.split()
            if tokens:
                start_col = col + segment.index(tokens[0])
                kind, args = tokens[0], tokens[1:]
                if kind in ("X", "Xp", "Xm"):
                    if len(args) != 4:
                        raise PDSyntaxError(
                            f"crossing needs 4 slots, got {len(args)}", lineno, start_col
                        )
                    slots = tuple(_int_token(t, lineno, start_col) for t in args)
                    sign = {"X": 0, "Xp": 1, "Xm": -1}[kind]
                    crossings.append(Crossing(slots, sign))
                elif kind == "B":
                    if boundary is not None:
                        raise PDSyntaxError("duplicate boundary record", lineno, start_col)
                    if len(args) not in (2, 4):
                        raise PDSyntaxError(
                            f"boundary needs 2 or 4 endpoints, got {len(args)}",
                            lineno,
                            start_col,
                        )
                    boundary = tuple(_int_token(t, lineno, start_col) for t in args)
                elif kind == "O":
                    if len(args) != 1:
                        raise PDSyntaxError("circle record needs 1 label", lineno, start_col)
                    circles.append(_int_token(args[0], lineno, start_col))
                else:
                    raise PDSyntaxError(f"unknown record {kind!r}", lineno, start_col)
            col += len(segment) + 1
    return crossings, circles, boundary


def parse_diagram(text: str) -> Diagram:
    """Parse PD text into a validated Diagram."""
    crossings, circles, boundary = _parse_text(text)
    d = Diagram(tuple(crossings), tuple(circles), boundary or ())
    validate(d)
    return d


def serialize(d: Diagram) -> str:
    """Canonical text rendering: crossings, circles, then the boundary record."""
    lines = []
    for c in d.crossings:
        kind = {0: "X", 1: "Xp", -1: "Xm"}[c.sign]
        lines.append(" ".join([kind] + [str(s) for s in c.slots]))
    for k in d.circles:
        lines.append(f"O {k}")
    if d.boundary:
        lines.append("B " + " ".join(str(e) for e in d.boundary))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation

_CAP = -1  # virtual vertex index for the capped tangle boundary


def _occurrences(d: Diagram) -> dict[int, list[tuple[int, int]]]:
    """Map each arc label to its (vertex, slot) occurrences; cap vertex is -1."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for si, label in enumerate(c.slots):
            occ.setdefault(label, []).append((ci, si))
    for bi, label in enumerate(d.boundary):
        occ.setdefault(label, []).append((_CAP, bi))
    return occ


def validate(d: Diagram) -> None:
    """Check occurrence counts, orientation consistency, and planarity."""
    if d.boundary and len(d.boundary) not in (2, 4):
        raise ArcOccurrenceError("boundary must list 2 or 4 endpoints")
    crossing_count: dict[int, int] = {}
    for c in d.crossings:
        if c.sign not in (-1, 0, 1):
            raise DiagramError(f"bad crossing sign {c.sign}")
        for label in c.slots:
            if label <= 0:
                raise ArcOccurrenceError(f"arc labels must be positive, got {label}")
            crossing_count[label] = crossing_count.get(label, 0) + 1
    boundary_count: dict[int, int] = {}
    for label in d.boundary:
        boundary_count[label] = boundary_count.get(label, 0) + 1
    for k in d.circles:
        if k in crossing_count or k in boundary_count or d.circles.count(k) > 1:
            raise ArcOccurrenceError(f"circle label {k} reused elsewhere")
    for label, n in crossing_count.items():
        expected = 2 - boundary_count.get(label, 0)
        if n != expected:
            raise ArcOccurrenceError(
                f"arc {label} occurs {n} times in crossings, expected {expected}"
            )
    for label, n in boundary_count.items():
        if n == 2 and label in crossing_count:
            raise ArcOccurrenceError(
                f"strand {label} listed twice in boundary but also crosses"
            )
        if n > 2:
            raise ArcOccurrenceError(f"endpoint {label} repeated in boundary")
        if n == 1 and label not in crossing_count:
            raise ArcOccurrenceError(f"endpoint {label} dangles (no crossing occurrence)")
    signs = {c.sign for c in d.crossings}
    if 0 in signs and len(signs) > 1:
        raise OrientationError("diagram mixes signed and unsigned crossings")
    _check_euler(d)
    if d.oriented:
        _edge_directions(d)  # raises on inconsistent orientation


def _vertex_rotations(d: Diagram) -> dict[int, tuple[int, ...]]:
    rot = {ci: c.slots for ci, c in enumerate(d.crossings)}
    if d.boundary:
        rot[_CAP] = d.boundary
    return rot


def _face_orbits(d: Diagram) -> list[list[tuple[int, int]]]:
    """Orbits of the next-corner permutation sigmaedge-swap over all darts."""
    rot = _vertex_rotations(d)
    occ = _occurrences(d)
    other: dict[tuple[int, int], tuple[int, int]] = {}
    for label, places in occ.items():
        if len(places) != 2:
            raise ArcOccurrenceError(f"arc {label} has {len(places)} occurrences")
        a, b = places
        other[a] = b
        other[b] = a
    orbits = []
    seen = set()
    darts = [(v, s) for v in sorted(rot, key=lambda x: (x == _CAP, x)) for s in range(len(rot[v]))]
    for start in darts:
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            v, s = other[cur]
            cur = (v, (s + 1) % len(rot[v]))
        orbits.append(orbit)
    return orbits


def _check_euler(d: Diagram) -> None:
    if not d.crossings and not d.boundary:
        return
    rot = _vertex_rotations(d)
    occ = _occurrences(d)
    # vertex components through shared edges
    parent = {v: v for v in rot}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in occ.values():
        if len(places) == 2:
            a, b = find(places[0][0]), find(places[1][0])
            if a != b:
                parent[a] = b
    orbits = _face_orbits(d)
    comp_faces: dict[int, int] = {}
    for orbit in orbits:
        comp_faces[find(orbit[0][0])] = comp_faces.get(find(orbit[0][0]), 0) + 1
    comp_v: dict[int, int] = {}
    for v in rot:
        comp_v[find(v)] = comp_v.get(find(v), 0) + 1
    comp_e: dict[int, int] = {}
    for places in occ.values():
        comp_e[find(places[0][0])] = comp_e.get(find(places[0][0]), 0) + 1
    for comp, nv in comp_v.items():
        ne = comp_e.get(comp, 0)
        nf = comp_faces.get(comp, 0)
        if nv - ne + nf != 2:
            raise PlanarityError(
                f"rotation system is not planar: V-E+F = {nv}-{ne}+{nf} != 2"
            )


# ---------------------------------------------------------------------------
# faces, components, strands


def faces(d: Diagram) -> list[Face]:
    """Complete face decomposition; crossing-free circles add their two sides."""
    validate(d)
    result = []
    for orbit in _face_orbits(d):
        corners = tuple((v, s) for v, s in orbit if v != _CAP)
        labels = frozenset(
            (d.crossings[v].slots[s] if v != _CAP else d.boundary[s]) for v, s in orbit
        )
        result.append(Face(len(result), corners, labels))
    for k in d.circles:
        result.append(Face(len(result), (), frozenset({k})))
        result.append(Face(len(result), (), frozenset({k})))
    return result


def _union_classes(d: Diagram, pairs) -> dict[int, int]:
    """Union-find over arc labels; returns label -> representative (min label)."""
    parent = {a: a for a in d.arcs()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                ra, rb = rb, ra
            parent[ra] = rb
    return {a: find(a) for a in parent}


def components(d: Diagram) -> list[frozenset[int]]:
    """Partition arcs into link components / open strands by strand-following."""
    pairs = []
    for c in d.crossings:
        pairs.append((c.slots[0], c.slots[2]))
        pairs.append((c.slots[1], c.slots[3]))
    rep = _union_classes(d, pairs)
    groups: dict[int, set[int]] = {}
    for label, r in rep.items():
        groups.setdefault(r, set()).add(label)
    return [frozenset(g) for _, g in sorted(groups.items())]


def strand_classes(d: Diagram) -> dict[int, int]:
    """Merge the two labels of each over-strand; the classes are the coloring unknowns."""
    pairs = [(c.slots[1], c.slots[3]) for c in d.crossings]
    return _union_classes(d, pairs)


def co_facial(d: Diagram, a1: int, a2: int) -> bool:
    """True iff some face is incident to both arcs."""
    if a1 == a2:
        raise DiagramError("co_facial needs two distinct arcs")
    labels = d.arcs()
    for a in (a1, a2):
        if a not in labels:
            raise DiagramError(f"unknown arc label {a}")
    return any(a1 in f.arcs and a2 in f.arcs for f in faces(d))


# ---------------------------------------------------------------------------
# orientation


def _edge_directions(d: Diagram):
    """Tail/head occurrence of every arc under the declared crossing signs."""
    heads: dict[tuple[int, int], bool] = {}  # occurrence -> flows into vertex?
    for ci, c in enumerate(d.crossings):
        into = {0: True, 2: False}
        into[3 if c.sign >= 0 else 1] = True
        into[1 if c.sign >= 0 else 3] = False
        for s in range(4):
            heads[(ci, s)] = into[s]
    occ = _occurrences(d)
    directions = {}
    for label, places in occ.items():
        ins = [p for p in places if heads.get(p, None) is True]
        outs = [p for p in places if heads.get(p, None) is False]
        caps = [p for p in places if p[0] == _CAP]
        if len(ins) + len(caps) < 1 or len(outs) + len(caps) < 1 or len(ins) > 1 or len(outs) > 1:
            raise OrientationError(f"arc {label} has inconsistent flow")
        tail = outs[0] if outs else caps[0]
        head = ins[0] if ins else caps[-1]
        directions[label] = (tail, head)
    return directions


def orient(d: Diagram) -> Diagram:
    """Assign a deterministic orientation: every crossing becomes signed.

    Open strands run from their first boundary occurrence; closed components
    start at their smallest arc label.  Crossing records are rotated so slot
    0 is the incoming under-strand, then signed.
    """
    if d.oriented:
        return d
    occ = _occurrences(d)
    flow_in: dict[tuple[int, int], bool] = {}  # crossing occurrence -> arc flows in

    def walk(label, tail):
        # follow the strand, marking flow at each crossing occurrence
        while True:
            places = [p for p in occ[label] if p != tail]
            head = places[0] if places else None
            if tail[0] != _CAP:
                flow_in[tail] = False
            if head is None or head[0] == _CAP:
                return
            flow_in[head] = True
            v, s = head
            nxt = (v, (s + 2) % 4)
            if nxt in flow_in:
                return
            label = d.crossings[v].slots[(s + 2) % 4]
            tail = nxt

    for bi, label in enumerate(d.boundary):
        start = (_CAP, bi)
        crossing_places = [p for p in occ[label] if p[0] != _CAP]
        if crossing_places and (crossing_places[0] not in flow_in):
            walk(label, start)
    for ci, c in enumerate(d.crossings):
        for s in range(4):
            if (ci, s) not in flow_in:
                walk(c.slots[s], (ci, s))
    new_crossings = []
    for ci, c in enumerate(d.crossings):
        slots = c.slots
        if not flow_in[(ci, 0)]:
            slots = (slots[2], slots[3], slots[0], slots[1])
            base = 2
        else:
            base = 0
        over_in_at_3 = flow_in[(ci, (base + 3) % 4)]
        sign = 1 if over_in_at_3 else -1
        new_crossings.append(Crossing(slots, sign))
    out = Diagram(tuple(new_crossings), d.circles, d.boundary)
    validate(out)
    return out


def unoriented(d: Diagram) -> Diagram:
    return Diagram(tuple(Crossing(c.slots, 0) for c in d.crossings), d.circles, d.boundary)


# ---------------------------------------------------------------------------
# relabeling and comparison


def relabel(d: Diagram, mapping: dict[int, int]) -> Diagram:
    """Apply a label substitution (labels not in the mapping stay put)."""

    def m(x):
        return mapping.get(x, x)

    out = Diagram(
        tuple(Crossing(tuple(m(s) for s in c.slots), c.sign) for c in d.crossings),
        tuple(m(k) for k in d.circles),
        tuple(m(e) for e in d.boundary),
    )
    return out


def max_label(d: Diagram) -> int:
    labels = d.arcs()
    return max(labels) if labels else 0


def canonical_form(d: Diagram) -> str:
    """A relabeling-invariant rendering, for isomorphism-up-to-relabel checks."""
    if not d.crossings:
        circles = sorted(range(1, len(d.circles) + 1))
        base = "".join(f"O {k}\n" for k in circles)
        if d.boundary:
            seen: dict[int, int] = {}
            names = [seen.setdefault(e, len(seen) + 1) for e in d.boundary]
            base += "B " + " ".join(map(str, names)) + "\n"
        return base
    best = None
    occ = _occurrences(d)
    for start_ci in range(len(d.crossings)):
        for offset in range(4):
            names: dict[int, int] = {}
            order = []
            queue = [(start_ci, offset)]
            visited = set()
            while queue or len(visited) < len(d.crossings):
                if not queue:
                    rest = [ci for ci in range(len(d.crossings)) if ci not in visited]
                    queue.append((rest[0], 0))
                ci, off = queue.pop(0)
                if ci in visited:
                    continue
                visited.add(ci)
                order.append((ci, off))
                for k in range(4):
                    slot = (off + k) % 4
                    label = d.crossings[ci].slots[slot]
                    if label not in names:
                        names[label] = len(names) + 1
                        # scan the neighbor from the slot this label enters at
                        for v, s in occ[label]:
                            if v != _CAP and v not in visited and (v, s) != (ci, slot):
                                queue.append((v, s))
            rows = []
            for ci, off in order:
                c = d.crossings[ci]
                even = off - (off % 2)  # keep the under pair at positions 0/2
                slots = tuple(names[c.slots[(even + k) % 4]] for k in range(4))
                if c.sign == 0:
                    alt = (slots[2], slots[3], slots[0], slots[1])
                    slots = min(slots, alt)
                rows.append((slots, c.sign))
            rows.sort()
            text = "".join(f"{sign}:{slots}\n" for slots, sign in rows)
            for k in d.circles:
                text += "O\n"
            if d.boundary:
                text += "B " + " ".join(str(names.get(e, 0)) for e in d.boundary) + "\n"
            if best is None or text < best:
                best = text
    return best

"""Tangle algebra: closures, addition, mirrors, rational tangles, linking.

A 2-tangle is a Diagram whose boundary record lists its four endpoints in
NW, NE, SE, SW order; a 1-tangle lists two.  The numerator closure caps
NW-NE and SW-SE, the denominator closure caps NW-SW and NE-SE, and tangle
addition fuses the east side of the left tangle to the west side of the
right one.

Rational tangles are built from a twist vector [a1, ..., an] evaluated as
the continued fraction an + 1/(a_{n-1} + ... + 1/a1): the entry sharing the
parity of n is a column of east twists (additive), the other entries are
rows of south twists (reciprocal-additive).  Odd-length vectors grow from
the zero tangle; even-length vectors start from the infinity tangle, since
south twists act trivially on the zero tangle (they only kink the bottom
strand).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    components,
    max_label,
    relabel,
    validate,
)

__all__ = [
    "TangleFraction",
    "close_one_tangle",
    "connectivity",
    "denominator_closure",
    "infinity_tangle",
    "insert_into_host",
    "linking_sum",
    "mirror",
    "numerator_closure",
    "rational_tangle",
    "rotate90",
    "tangle_add",
    "tangle_fraction",
    "zero_tangle",
]


class TangleError(DiagramError):
    pass


def _require_tangle(d: Diagram, arity: int = 4) -> None:
    if len(d.boundary) != arity:
        raise TangleError(f"operation needs a {arity}-endpoint tangle")


def zero_tangle() -> Diagram:
    """Two horizontal strands: NW-NE over nothing, SW-SE below."""
    return Diagram(boundary=(1, 1, 2, 2))


def infinity_tangle() -> Diagram:
    """Two vertical strands: NW-SW and NE-SE."""
    return Diagram(boundary=(1, 2, 2, 1))


def connectivity(d: Diagram) -> str:
    """Endpoint pairing pattern: 'H' (NW-NE/SW-SE), 'V' (NW-SW/NE-SE), or 'X'."""
    _require_tangle(d)
    comp = components(d)
    cls = {}
    for i, grp in enumerate(comp):
        for label in grp:
            cls[label] = i
    nw, ne, se, sw = d.boundary
    if cls[nw] == cls[ne]:
        return "H"
    if cls[nw] == cls[sw]:
        return "V"
    if cls[nw] == cls[se]:
        return "X"
    raise TangleError("endpoints do not pair into two strands")


# ---------------------------------------------------------------------------
# joining machinery


def _apply_joins(crossings, circles, joins, carry):
    """Glue pairs of loose ends by merging labels; self-joins become circles.

    `carry` is a list of labels (e.g. a boundary) that must be renamed along
    with the merges.  Smaller label wins each merge, which keeps the left
    operand's labels stable under addition.
    """
    crossings = [[list(c.slots), c.sign] for c in crossings]
    circles = list(circles)
    joins = [list(j) for j in joins]
    carry = list(carry)
    for idx, (x, y) in enumerate(joins):
        if x == y:
            if any(x in slots for slots, _ in crossings):
                raise TangleError(f"self-join of arc {x} with crossing occurrences")
            circles.append(x)
            continue
        keep, drop = (x, y) if x < y else (y, x)
        for slots, _ in crossings:
            for i, s in enumerate(slots):
                if s == drop:
                    slots[i] = keep
        for j in range(idx + 1, len(joins)):
            joins[j] = [keep if v == drop else v for v in joins[j]]
        carry = [keep if v == drop else v for v in carry]
    return [Crossing(tuple(slots), sign) for slots, sign in crossings], circles, carry


def _closure(d: Diagram, joins) -> Diagram:
    crossings, circles, _ = _apply_joins(d.crossings, d.circles, joins, [])
    out = Diagram(tuple(crossings), tuple(circles), ())
    validate(out)
    return out


def numerator_closure(t: Diagram) -> Diagram:
    """Cap NW-NE and SW-SE with crossing-free arcs."""
    _require_tangle(t)
    nw, ne, se, sw = t.boundary
    return _closure(t, [(nw, ne), (sw, se)])


def denominator_closure(t: Diagram) -> Diagram:
    """Cap NW-SW and NE-SE with crossing-free arcs."""
    _require_tangle(t)
    nw, ne, se, sw = t.boundary
    return _closure(t, [(nw, sw), (ne, se)])


def close_one_tangle(t: Diagram) -> Diagram:
    """Join the two endpoints of a 1-tangle."""
    _require_tangle(t, arity=2)
    return _closure(t, [tuple(t.boundary)])


def tangle_add(t1: Diagram, t2: Diagram) -> Diagram:
    """Planar juxtaposition: fuse t1's NE/SE side to t2's NW/SW side."""
    _require_tangle(t1)
    _require_tangle(t2)
    shift = max_label(t1)
    t2 = relabel(t2, {a: a + shift for a in t2.arcs()})
    joins = [(t1.boundary[1], t2.boundary[0]), (t1.boundary[2], t2.boundary[3])]
    carry = [t1.boundary[0], t2.boundary[1], t2.boundary[2], t1.boundary[3]]
    crossings, circles, carry = _apply_joins(
        t1.crossings + t2.crossings, t1.circles + t2.circles, joins, carry
    )
    out = Diagram(tuple(crossings), tuple(circles), tuple(carry))
    validate(out)
    return out


def mirror(t: Diagram) -> Diagram:
    """Swap every crossing's over and under strands (slots rotate by one)."""
    out = Diagram(
        tuple(
            Crossing((c.slots[1], c.slots[2], c.slots[3], c.slots[0]), -c.sign)
            for c in t.crossings
        ),
        t.circles,
        t.boundary,
    )
    validate(out)
    return out


def rotate90(t: Diagram) -> Diagram:
    """Rotate the tangle disc a quarter turn (NE moves to NW)."""
    _require_tangle(t)
    nw, ne, se, sw = t.boundary
    out = Diagram(t.crossings, t.circles, (ne, se, sw, nw))
    validate(out)
    return out


def insert_into_host(t: Diagram, host: Diagram, closure: str = "N") -> Diagram:
    """Close tangle_add(t, host); the verification harness for persistence.

    Up to isotopy of the complement, any knot diagram containing t is such
    a closure, so certificates are exercised by sampling hosts.  1-tangles
    connect-sum with 1-tangle hosts instead (closure type is irrelevant).
    """
    if len(t.boundary) == 2:
        _require_tangle(host, arity=2)
        shift = max_label(t)
        host = relabel(host, {a: a + shift for a in host.arcs()})
        joins = [(t.boundary[0], host.boundary[0]), (t.boundary[1], host.boundary[1])]
        crossings, circles, _ = _apply_joins(
            t.crossings + host.crossings, t.circles + host.circles, joins, []
        )
        out = Diagram(tuple(crossings), tuple(circles), ())
        validate(out)
        return out
    s = tangle_add(t, host)
    if closure == "N":
        return numerator_closure(s)
    if closure == "D":
        return denominator_closure(s)
    raise TangleError(f"closure must be 'N' or 'D', got {closure!r}")


# ---------------------------------------------------------------------------
# rational tangles


@dataclass(frozen=True)
class TangleFraction:
    """A reduced fraction p/q with 1/0 for infinity and 0/1 for zero."""

    p: int
    q: int

    @property
    def is_zero(self) -> bool:
        return self.p == 0

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


def _normalize_fraction(p: int, q: int) -> TangleFraction:
    if p == 0 and q == 0:
        raise TangleError("0/0 is not a tangle fraction")
    if q == 0:
        return TangleFraction(1, 0)
    if p == 0:
        return TangleFraction(0, 1)
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return TangleFraction(p, q)


def tangle_fraction(twists: list[int]) -> TangleFraction:
    """Continued-fraction value an + 1/(a_{n-1} + ... + 1/a1), projectively."""
    if not twists:
        raise TangleError("twist vector must be nonempty")
    p, q = twists[0], 1
    for a in twists[1:]:
        p, q = a * p + q, p
    return _normalize_fraction(p, q)


def _east_twist(boundary, fresh, positive):
    nw, ne, se, sw = boundary
    a, b = fresh, fresh + 1  # new NE, new SE
    if positive:
        crossing = Crossing((ne, se, b, a))
    else:
        crossing = Crossing((se, b, a, ne))
    return crossing, (nw, a, b, sw), fresh + 2


def _south_twist(boundary, fresh, positive):
    nw, ne, se, sw = boundary
    c, d = fresh, fresh + 1  # new SW, new SE
    if positive:
        crossing = Crossing((sw, c, d, se))
    else:
        crossing = Crossing((se, sw, c, d))
    return crossing, (nw, ne, d, c), fresh + 2


def rational_tangle(twists: list[int]) -> Diagram:
    """Build the rational tangle of a twist vector with deterministic labels."""
    if not twists:
        raise TangleError("twist vector must be nonempty")
    n = len(twists)
    start = zero_tangle() if n % 2 == 1 else infinity_tangle()
    crossings: list[Crossing] = []
    boundary = start.boundary
    fresh = 3
    for i, a in enumerate(twists, start=1):
        east = (i % 2) == (n % 2)
        for _ in range(abs(a)):
            if east:
                x, boundary, fresh = _east_twist(boundary, fresh, a > 0)
            else:
                x, boundary, fresh = _south_twist(boundary, fresh, a > 0)
            crossings.append(x)
    out = Diagram(tuple(crossings), (), boundary)
    validate(out)
    return out


# ---------------------------------------------------------------------------
# linking


def linking_sum(t: Diagram) -> int:
    """Signed count of crossings between the two open strands, in half-units.

    The geometric linking contribution is half this value; the integer is
    returned so the arithmetic stays exact.  Requires an oriented 2-tangle.
    """
    _require_tangle(t)
    if not t.oriented:
        if t.crossings:
            raise TangleError("linking_sum needs an oriented tangle")
        return 0
    comp = components(t)
    cls = {}
    for i, grp in enumerate(comp):
        for label in grp:
            cls[label] = i
    open_classes = {cls[e] for e in t.boundary}
    if len(open_classes) != 2:
        raise TangleError("tangle does not have two open strands")
    total = 0
    for c in t.crossings:
        under, over = cls[c.slots[0]], cls[c.slots[1]]
        if under != over and {under, over} == open_classes:
            total += c.sign
    return total

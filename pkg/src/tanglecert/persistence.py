"""Cut constructions, boundary-monochromatic certificates, and verification.

A certificate for a tangle is a nontrivial coloring that gives every
boundary endpoint the same color.  Whatever diagram the tangle appears in,
the rest of that diagram can be colored by that one constant, producing a
nontrivial coloring of the whole knot; the knot is therefore nontrivial.
verify_certificate exercises exactly this argument over sampled host
tangles, so the soundness of each emitted certificate is tested, not
assumed.

The cut constructions manufacture certified tangles from nontrivially
colored knot diagrams: cutting one arc twice, or two same-colored arcs once
each (transporting one next to the other by R2 moves when they do not
share a face).  Extra transport passes spiral the mover around the
destination strand, inflating the linking between the tangle's open strands
while keeping the boundary monochromatic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .colorings import (
    FoxColoring,
    Quandle,
    QuandleColoring,
    fox_solution_space,
    link_determinant,
    quandle_colorings,
    verify_coloring,
)
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    _face_orbits,
    co_facial,
    components,
    faces,
    max_label,
    orient,
    serialize,
    validate,
)
from .moves import MoveRecord, apply_r2_over, r2_transport, recolor_after_move, records_to_json
from .tangle import (
    TangleFraction,
    close_one_tangle,
    denominator_closure,
    infinity_tangle,
    insert_into_host,
    linking_sum,
    mirror,
    numerator_closure,
    rational_tangle,
    tangle_add,
    tangle_fraction,
    zero_tangle,
)

__all__ = [
    "CertificateError",
    "CertificateNotFound",
    "CertificateSearchReport",
    "IrreducibilityReport",
    "PersistenceCertificate",
    "VerificationReport",
    "build_T_plus_Tstar",
    "cut_arc_once",
    "cut_arc_twice",
    "cut_two_arcs",
    "ensure_same_colored_pair",
    "find_certificate",
    "find_certificate_report",
    "find_same_colored_pairs",
    "irreducibility_report",
    "krebes_gcd",
    "verify_certificate",
]

_PRIMES_TO_97 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


class CertificateError(DiagramError):
    pass


class CertificateNotFound(CertificateError):
    def __init__(self, message: str, report=None, cannot_exist: bool = False):
        super().__init__(message)
        self.report = report
        self.cannot_exist = cannot_exist


@dataclass
class PersistenceCertificate:
    """A boundary-monochromatic nontrivial coloring of a tangle."""

    kind: tuple  # ('fox', N) or ('quandle', Quandle)
    coloring: object  # FoxColoring or QuandleColoring over the tangle's arcs
    boundary_color: int
    witness: tuple[int, int]
    moves: list[MoveRecord] = field(default_factory=list)

    def to_json(self, tangle_name: str = "") -> dict:
        kind = (
            {"fox": self.kind[1]}
            if self.kind[0] == "fox"
            else {"quandle": self.kind[1].name or "table"}
        )
        return {
            "schema": 1,
            "tangle": tangle_name,
            "kind": kind,
            "boundary_color": self.boundary_color,
            "colors": {str(k): v for k, v in sorted(self.coloring.colors.items())},
            "witness": list(self.witness),
            "moves": records_to_json(self.moves),
        }


def _check_certificate_shape(t: Diagram, cert: PersistenceCertificate) -> None:
    colors = cert.coloring.colors
    for e in t.boundary:
        if colors[e] != cert.boundary_color:
            raise CertificateError(f"endpoint {e} is not boundary-colored")
    a, b = cert.witness
    if colors[a] == colors[b]:
        raise CertificateError("witness arcs carry equal colors")


# ---------------------------------------------------------------------------
# cutting constructions


def _face_darts(d: Diagram, want: set[int]):
    """First face whose arcs contain `want`; returns its orbit darts."""
    fs = faces(d)
    orbits = _face_orbits(d)
    for f in fs:
        if want <= f.arcs and f.corners:
            return f.index, orbits[f.index]
    raise DiagramError(f"no face contains all of {sorted(want)}")


def _edge_at(d: Diagram, dart):
    v, s = dart
    return d.boundary[s] if v == -1 else d.crossings[v].slots[s]


def _other_occurrence(d: Diagram, label: int, dart):
    occ = []
    for ci, c in enumerate(d.crossings):
        for si, s in enumerate(c.slots):
            if s == label:
                occ.append((ci, si))
    return next(p for p in occ if p != dart)


def _replace_slot(d: Diagram, dart, new: int) -> Diagram:
    v, s = dart
    crossings = [list(c.slots) for c in d.crossings]
    crossings[v][s] = new
    return Diagram(
        tuple(Crossing(tuple(sl), c.sign) for sl, c in zip(crossings, d.crossings)),
        d.circles,
        d.boundary,
    )


def cut_arc_once(d: Diagram, arc: int) -> Diagram:
    """Disconnect one arc of a closed 1-component diagram: a 1-tangle."""
    if d.boundary:
        raise DiagramError("cut operations need a closed diagram")
    if len(components(d)) != 1:
        raise DiagramError("cut operations need a 1-component diagram")
    if arc in d.circles:
        out = Diagram(d.crossings, tuple(k for k in d.circles if k != arc), (arc, arc))
        validate(out)
        return out
    if arc not in d.arcs():
        raise DiagramError(f"unknown arc {arc}")
    _, orbit = _face_darts(d, {arc})
    dart = next(dt for dt in orbit if dt[0] != -1 and _edge_at(d, dt) == arc)
    far = _other_occurrence(d, arc, dart)
    fresh = max_label(d) + 1
    out = _replace_slot(d, far, fresh)
    out = Diagram(out.crossings, out.circles, (arc, fresh))
    validate(out)
    return out


def cut_arc_twice(d: Diagram, coloring, arc: int):
    """Disconnect one arc at two points: a certified 2-tangle.

    All four endpoints inherit the arc's color, so the certificate's
    boundary color is coloring[arc]; the coloring must be nontrivial or the
    certificate would be vacuous.
    """
    if d.boundary:
        raise DiagramError("cut operations need a closed diagram")
    if not coloring.nontrivial:
        raise CertificateError("a trivial coloring certifies nothing")
    if not verify_coloring(d, coloring):
        raise CertificateError("coloring is not valid on the diagram")
    if arc in d.circles:
        raise DiagramError("cut the circle once to get the trivial 1-tangle")
    if arc not in d.arcs():
        raise DiagramError(f"unknown arc {arc}")
    _, orbit = _face_darts(d, {arc})
    dart = next(dt for dt in orbit if dt[0] != -1 and _edge_at(d, dt) == arc)
    far = _other_occurrence(d, arc, dart)
    mid, tail = max_label(d) + 1, max_label(d) + 2
    out = _replace_slot(d, far, tail)
    out = Diagram(out.crossings, out.circles, (arc, mid, mid, tail))
    validate(out)
    colors = dict(coloring.colors)
    colors[mid] = colors[arc]
    colors[tail] = colors[arc]
    new_coloring = _with_colors(coloring, colors)
    cert = PersistenceCertificate(
        _kind_of(coloring),
        new_coloring,
        boundary_color=colors[arc],
        witness=new_coloring.witness(),
    )
    _check_certificate_shape(out, cert)
    return out, cert


def _kind_of(coloring):
    if isinstance(coloring, FoxColoring):
        return ("fox", coloring.modulus)
    return ("quandle", coloring.quandle)


def _with_colors(coloring, colors):
    if isinstance(coloring, FoxColoring):
        return FoxColoring(coloring.modulus, colors)
    return QuandleColoring(coloring.quandle, colors)


def _cut_pair(d: Diagram, arc1: int, arc2: int) -> tuple[Diagram, int, int]:
    """Cut two co-facial arcs once each; boundary in face-walk order.

    Returns (tangle, fresh1, fresh2) where the numerator closure of the
    tangle re-glues both cuts.
    """
    _, orbit = _face_darts(d, {arc1, arc2})
    dart1 = next(dt for dt in orbit if dt[0] != -1 and _edge_at(d, dt) == arc1)
    dart2 = next(dt for dt in orbit if dt[0] != -1 and _edge_at(d, dt) == arc2)
    far1 = _other_occurrence(d, arc1, dart1)
    far2 = _other_occurrence(d, arc2, dart2)
    fresh1, fresh2 = max_label(d) + 1, max_label(d) + 2
    out = _replace_slot(d, far1, fresh1)
    out = _replace_slot(out, far2, fresh2)
    # endpoints read clockwise, which reverses the face-walk encounter order
    out = Diagram(out.crossings, out.circles, (fresh1, arc1, fresh2, arc2))
    validate(out)
    return out, fresh1, fresh2


def cut_two_arcs(d: Diagram, coloring, a1: int, a2: int, extra_passes: int = 0):
    """Cut two same-colored arcs once each, transporting them together first.

    Returns (tangle, certificate, move records).  extra_passes > 0 spirals
    the mover around the destination strand before cutting, adding one
    same-signed crossing between the tangle's open strands per pass.
    """
    if d.boundary:
        raise DiagramError("cut operations need a closed diagram")
    if a1 == a2:
        raise DiagramError("need two distinct arcs")
    if not coloring.nontrivial:
        raise CertificateError("a trivial coloring certifies nothing")
    if coloring.colors[a1] != coloring.colors[a2]:
        raise CertificateError(f"arcs {a1} and {a2} carry different colors")
    if not verify_coloring(d, coloring):
        raise CertificateError("coloring is not valid on the diagram")
    records: list[MoveRecord] = []
    mover = a1
    if not co_facial(d, a1, a2):
        moved = r2_transport(d, coloring, a1, a2)
        d, coloring, mover = moved.diagram, moved.coloring, moved.segment
        records.extend(moved.records)
    dest_labels = [a2]
    for _ in range(extra_passes):
        target = None
        for candidate in (dest_labels[-1], *reversed(dest_labels[:-1])):
            if candidate in d.arcs() and candidate != mover and co_facial(d, mover, candidate):
                target = candidate
                break
        if target is None:
            raise CertificateError("cannot continue the spiral: no co-facial segment")
        d2, rec = apply_r2_over(d, mover, target)
        coloring = recolor_after_move(coloring, rec, d, d2)
        d = d2
        records.append(rec)
        mover = rec.fresh[0]
        dest_labels.extend([rec.fresh[2], rec.fresh[3]])
    boundary_color = coloring.colors[mover]
    candidates = [
        lbl
        for lbl in dest_labels
        if lbl in d.arcs()
        and lbl != mover
        and coloring.colors[lbl] == boundary_color
        and co_facial(d, mover, lbl)
    ]
    if not candidates:
        raise CertificateError("no same-colored co-facial segment left to cut")
    best = None
    for lbl in sorted(candidates):
        t, f1, f2 = _cut_pair(d, mover, lbl)
        score = abs(linking_sum(orient(t)))
        if best is None or score > best[0]:
            best = (score, lbl, t, f1, f2)
    _, lbl, t, f1, f2 = best
    colors = dict(coloring.colors)
    colors[f1] = colors[mover]
    colors[f2] = colors[lbl]
    cert_coloring = _with_colors(coloring, colors)
    cert = PersistenceCertificate(
        _kind_of(coloring),
        cert_coloring,
        boundary_color=boundary_color,
        witness=cert_coloring.witness(),
        moves=records,
    )
    _check_certificate_shape(t, cert)
    return t, cert, records


def find_same_colored_pairs(d: Diagram, coloring, require_non_cofacial: bool = False):
    """Distinct arc pairs with equal colors, smallest labels first."""
    arcs = sorted(d.arcs())
    out = []
    for i, a in enumerate(arcs):
        for b in arcs[i + 1:]:
            if coloring.colors[a] == coloring.colors[b]:
                if require_non_cofacial and co_facial(d, a, b):
                    continue
                out.append((a, b))
    return out


def ensure_same_colored_pair(d: Diagram, coloring):
    """A same-colored arc pair, creating one by an R2 move if necessary.

    Some colorings give every arc a different color; pushing one arc over
    another mints a segment colored 2*over - under, which can be made to
    collide with an existing color.  Returns (diagram, coloring, pair,
    records).
    """
    pairs = find_same_colored_pairs(d, coloring)
    if pairs:
        return d, coloring, pairs[0], []
    if not isinstance(coloring, FoxColoring):
        raise CertificateError("pair creation is implemented for Fox colorings")
    n = coloring.modulus
    colors = coloring.colors
    fs = faces(d)
    for f in fs:
        for mover in sorted(f.arcs):
            for target in sorted(f.arcs):
                if mover == target:
                    continue
                minted = (2 * colors[mover] - colors[target]) % n
                match = [
                    a
                    for a in sorted(d.arcs())
                    if colors[a] % n == minted and a not in (mover, target)
                ]
                if not match:
                    continue
                d2, rec = apply_r2_over(d, mover, target)
                c2 = recolor_after_move(coloring, rec, d, d2)
                pair = (rec.fresh[2], match[0])  # the new middle segment of target
                assert c2.colors[pair[0]] % n == c2.colors[pair[1]] % n
                return d2, c2, pair, [rec]
    raise CertificateError("no same-colored pair can be created by one move")


# ---------------------------------------------------------------------------
# certificate search


def krebes_gcd(t: Diagram) -> int:
    """gcd of the two closure determinants; the modulus obstruction.

    A boundary-monochromatic coloring mod p extends to both closures, so p
    must divide both determinants (link determinant 0 meaning no
    obstruction from that closure).
    """
    if len(t.boundary) != 4:
        raise DiagramError("krebes_gcd needs a 2-tangle")
    return math.gcd(
        link_determinant(numerator_closure(t)), link_determinant(denominator_closure(t))
    )


def _default_moduli(t: Diagram) -> tuple[list[int], bool]:
    """(moduli to sweep, cannot_exist) from the gcd obstruction."""
    if len(t.boundary) == 4:
        g = krebes_gcd(t)
    else:
        g = link_determinant(close_one_tangle(t))
    if g == 1:
        return [], True
    if g == 0:
        return list(_PRIMES_TO_97), False
    return sorted({p for p in _prime_factors(g)}), False


def _prime_factors(n: int):
    n = abs(n)
    p = 2
    while p * p <= n:
        while n % p == 0:
            yield p
            n //= p
        p += 1
    if n > 1:
        yield n


@dataclass
class CertificateSearchReport:
    """Per-modulus/per-quandle outcome of a certificate search."""

    entries: list[dict] = field(default_factory=list)
    cannot_exist: bool = False
    certificate: PersistenceCertificate | None = None

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "cannot_exist": self.cannot_exist,
            "entries": self.entries,
            "found": self.certificate is not None,
        }


def find_certificate_report(
    t: Diagram,
    moduli: list[int] | None = None,
    quandles: tuple[Quandle, ...] = (),
    cap: int = 10 ** 6,
) -> CertificateSearchReport:
    """Search Fox moduli then quandles for a boundary-monochromatic coloring.

    Endpoints are pinned to 0 for Fox moduli (the affine symmetry u*c + v
    makes this lossless) and to each orbit representative for quandles.
    When no certificate exists at some modulus, the report records a
    propagation clash: a pair of arcs forced to share a color.
    """
    if len(t.boundary) not in (2, 4):
        raise DiagramError("certificates are for 1- and 2-tangles")
    report = CertificateSearchReport()
    if moduli is None:
        moduli, cannot = _default_moduli(t)
        report.cannot_exist = cannot
    for n in sorted(moduli):
        space = fox_solution_space(t, n, pins={e: 0 for e in t.boundary})
        cert_coloring = space.first_nonconstant(cap)
        if cert_coloring is not None:
            cert = PersistenceCertificate(
                ("fox", n), cert_coloring, 0, cert_coloring.witness()
            )
            _check_certificate_shape(t, cert)
            report.entries.append({"fox": n, "found": True})
            report.certificate = cert
            return report
        clash = space.forced_equal_pair()
        entry = {"fox": n, "found": False}
        if clash:
            entry["clash"] = list(clash)
        report.entries.append(entry)
    for q in quandles:
        for v in q.orbit_representatives():
            search = quandle_colorings(t, q, pins={e: v for e in t.boundary}, cap=cap)
            hit = next((qc for qc in search if qc.nontrivial), None)
            if hit is not None:
                cert = PersistenceCertificate(("quandle", q), hit, v, hit.witness())
                _check_certificate_shape(t, cert)
                report.entries.append({"quandle": q.name or "table", "pin": v, "found": True})
                report.certificate = cert
                return report
        report.entries.append({"quandle": q.name or "table", "found": False})
    return report


def find_certificate(
    t: Diagram,
    moduli: list[int] | None = None,
    quandles: tuple[Quandle, ...] = (),
) -> PersistenceCertificate | None:
    return find_certificate_report(t, moduli, quandles).certificate


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    entries: list[dict] = field(default_factory=list)
    passes: int = 0
    skipped: int = 0

    @property
    def trials(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "passes": self.passes,
            "skipped": self.skipped,
            "entries": self.entries,
        }


def _random_twists(rng: random.Random) -> list[int]:
    length = rng.randint(1, 4)
    return [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(length)]


def _east_cap(t: Diagram) -> Diagram:
    """Close a 2-tangle's east side, leaving a 1-tangle with NW/SW endpoints."""
    from .tangle import _apply_joins

    nw, ne, se, sw = t.boundary
    crossings, circles, carry = _apply_joins(t.crossings, t.circles, [(ne, se)], [nw, sw])
    out = Diagram(tuple(crossings), tuple(circles), tuple(carry))
    validate(out)
    return out


def verify_certificate(
    t: Diagram, cert: PersistenceCertificate, trials: int = 100, seed: int = 0
) -> VerificationReport:
    """Insert the tangle into sampled hosts and check the extended coloring.

    Every 1-component closure must admit the monochromatic extension as a
    valid nontrivial coloring; a failing host raises with the counterexample
    diagram serialized.  Multi-component closures are listed as skipped.
    """
    _check_certificate_shape(t, cert)
    rng = random.Random(seed)
    report = VerificationReport()
    one_tangle = len(t.boundary) == 2
    hosts: list[tuple[str, Diagram]] = []
    if one_tangle:
        hosts.append(("trivial", Diagram(boundary=(1, 1))))
        while len(hosts) < trials + 1:
            w = _random_twists(rng)
            host = _east_cap(rational_tangle(w))
            if host.circles or len(components(host)) != 1:
                continue  # the cap closed a loop; keep hosts single-stranded
            hosts.append((f"rational{w}-capped", host))
    else:
        hosts.append(("zero", zero_tangle()))
        hosts.append(("infinity", infinity_tangle()))
        while len(hosts) < trials + 2:
            w = _random_twists(rng)
            hosts.append((f"rational{w}", rational_tangle(w)))
    closures = ("N",) if one_tangle else ("N", "D")
    for name, host in hosts:
        for closure in closures:
            dgm = insert_into_host(t, host, closure)
            n_comp = len(components(dgm))
            entry = {"host": name, "closure": closure, "components": n_comp}
            if n_comp != 1:
                entry["result"] = "skipped"
                report.skipped += 1
                report.entries.append(entry)
                continue
            colors = {a: cert.coloring.colors.get(a, cert.boundary_color) for a in dgm.arcs()}
            ext = _with_colors(cert.coloring, colors)
            wa, wb = cert.witness
            ok = verify_coloring(dgm, ext) and colors[wa] != colors[wb]
            if not ok:
                raise CertificateError(
                    f"certificate fails on host {name} ({closure} closure):\n"
                    + serialize(dgm)
                )
            entry["result"] = "pass"
            report.passes += 1
            report.entries.append(entry)
    return report


# ---------------------------------------------------------------------------
# constructions and reports


def build_T_plus_Tstar(twists: list[int]):
    """Sum a rational tangle with its mirror image and certify the result.

    Degenerate fractions (0 and infinity) are rejected; when the gcd
    obstruction shows no Fox certificate can exist, that is reported as
    such rather than as a failed search.
    """
    fraction = tangle_fraction(twists)
    if fraction.is_zero or fraction.is_infinity:
        raise DiagramError(f"tangle fraction {fraction} is degenerate")
    t = rational_tangle(twists)
    s = tangle_add(t, mirror(t))
    report = find_certificate_report(s)
    if report.certificate is None:
        raise CertificateNotFound(
            "no boundary-monochromatic coloring found"
            + (" (gcd obstruction: none can exist)" if report.cannot_exist else ""),
            report=report,
            cannot_exist=report.cannot_exist,
        )
    return s, report.certificate


@dataclass
class ClosureEvidence:
    components: int
    determinant: int
    nontrivial_moduli: list[int]

    def to_json(self):
        return {
            "components": self.components,
            "determinant": self.determinant,
            "nontrivial_moduli": self.nontrivial_moduli,
        }


@dataclass
class IrreducibilityReport:
    fraction_reducible_hint: bool
    fraction: TangleFraction | None
    closure_n: ClosureEvidence
    closure_d: ClosureEvidence
    krebes_gcd: int
    local_knots: str
    verdict: str

    def to_json(self):
        return {
            "schema": 1,
            "fraction_reducible_hint": self.fraction_reducible_hint,
            "fraction": str(self.fraction) if self.fraction else None,
            "closure_N": self.closure_n.to_json(),
            "closure_D": self.closure_d.to_json(),
            "krebes_gcd": self.krebes_gcd,
            "local_knots": self.local_knots,
            "verdict": self.verdict,
        }


def _closure_evidence(dgm: Diagram, moduli) -> ClosureEvidence:
    from .colorings import has_nontrivial_fox

    det = link_determinant(dgm)
    nontrivial = [n for n in moduli if has_nontrivial_fox(dgm, n)]
    return ClosureEvidence(len(components(dgm)), det, nontrivial)


def irreducibility_report(
    t: Diagram, twists: list[int] | None = None, moduli=(2, 3, 5, 7, 11, 13, 17, 19, 23)
) -> IrreducibilityReport:
    """Evidence about irreducibility: closure nontriviality and the gcd.

    The verdict is an evidence summary, never a proof; local knot detection
    is out of scope and reported as unchecked.
    """
    if len(t.boundary) != 4:
        raise DiagramError("irreducibility reports are for 2-tangles")
    fraction = tangle_fraction(twists) if twists else None
    cn = _closure_evidence(numerator_closure(t), moduli)
    cd = _closure_evidence(denominator_closure(t), moduli)
    g = krebes_gcd(t)
    if not t.crossings and not t.circles:
        from .tangle import connectivity

        degenerate = "zero tangle" if connectivity(t) == "H" else "infinity tangle"
        verdict = f"excluded: {degenerate}"
    elif twists is not None:
        verdict = "reducible by construction (built from a twist vector)"
    else:
        problems = []
        for name, ev in (("N", cn), ("D", cd)):
            if ev.components == 1 and ev.determinant == 1 and not ev.nontrivial_moduli:
                problems.append(name)
        if problems:
            verdict = "not consistent with irreducible: trivial closure " + ",".join(problems)
        else:
            verdict = "consistent with irreducible"
    return IrreducibilityReport(
        fraction_reducible_hint=twists is not None,
        fraction=fraction,
        closure_n=cn,
        closure_d=cd,
        krebes_gcd=g,
        local_knots="not checked",
        verdict=verdict,
    )

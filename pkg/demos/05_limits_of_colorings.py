"""Where coloring certificates stop working.

Both closures of a tangle constrain its certificates: a boundary-
monochromatic coloring extends to both, so its modulus divides both closure
determinants.  When that gcd is 1, no coloring certificate can exist, even
for a tangle whose closures are both honestly knotted - persistence (if it
holds) must then be proved by other means.  The irreducibility report
gathers the closure evidence without pretending to decide anything.
"""

from pathlib import Path

from tanglecert import (
    determinant,
    denominator_closure,
    find_certificate_report,
    irreducibility_report,
    krebes_gcd,
    numerator_closure,
    parse_diagram,
    rational_tangle,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

tangle = parse_diagram((CORPUS / "fig8-tangle.pd").read_text())
print("A tangle whose numerator closure is the figure-8 knot and whose")
print("denominator closure is the trefoil:")
print("  det N =", determinant(numerator_closure(tangle)),
      " det D =", determinant(denominator_closure(tangle)),
      " gcd =", krebes_gcd(tangle))

report = find_certificate_report(tangle)
print("Certificate search:", "none found;" if report.certificate is None else "found!",
      "gcd obstruction says none can exist:", report.cannot_exist)

print("\nOn a small tangle, the failure is visible as a propagation clash:")
small = parse_diagram((CORPUS / "fig9-tangle.pd").read_text())
rep = find_certificate_report(small, moduli=[3, 5, 7, 11])
for entry in rep.entries:
    clash = entry.get("clash")
    msg = f"forced equal arcs {tuple(clash)}" if clash else "no witness"
    print(f"  mod {entry['fox']}: no certificate ({msg})")

print("\nIrreducibility evidence for the figure-8/trefoil tangle:")
ir = irreducibility_report(tangle)
print("  closure N:", ir.closure_n.to_json())
print("  closure D:", ir.closure_d.to_json())
print("  verdict:", ir.verdict, "| local knots:", ir.local_knots)

print("\nThe same report flags rational inputs as reducible by construction:")
ir2 = irreducibility_report(rational_tangle([2, 2]), twists=[2, 2])
print("  fraction:", ir2.fraction, "->", ir2.verdict)

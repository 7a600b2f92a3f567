"""From a nontrivially colored knot to a certified persistent tangle.

Cutting an arc of a colored knot diagram leaves the four new endpoints all
carrying that arc's color.  The cut-open tangle plus that single boundary
color is a persistence certificate: paste the tangle into any knot diagram,
color the rest of the diagram by the boundary constant, and the whole
diagram inherits a nontrivial coloring, so the knot cannot be the unknot.
"""

from tanglecert import (
    close_one_tangle,
    components,
    cut_arc_once,
    cut_arc_twice,
    determinant,
    fox_solution_space,
    insert_into_host,
    parse_diagram,
    rational_tangle,
    serialize,
    verify_certificate,
    zero_tangle,
)

trefoil = parse_diagram("X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3")
coloring = fox_solution_space(trefoil, 3).first_nonconstant()
print("Tricolored trefoil:", dict(sorted(coloring.colors.items())))

# One cut: a 1-tangle. Any knot containing it is a connected sum with the
# trefoil, hence nontrivial.
one = cut_arc_once(trefoil, 1)
print("\nCutting arc 1 once gives a 1-tangle with endpoints", one.boundary)
print("Re-closing it recovers a determinant-3 knot:",
      determinant(close_one_tangle(one)))

# Two cuts on the same arc: a 2-tangle with a certificate.
tangle, cert = cut_arc_twice(trefoil, coloring, 1)
print("\nCutting arc 1 at two points gives a 2-tangle:")
print(serialize(tangle))
print("certificate: boundary color", cert.boundary_color,
      "mod", cert.kind[1], "- witness arcs", cert.witness)

# The certificate is executable: drop the tangle into hosts and check.
report = verify_certificate(tangle, cert, trials=100, seed=0)
print(f"\nVerified against {report.trials} host closures:",
      f"{report.passes} knots nontrivially colored,",
      f"{report.skipped} skipped (multi-component).")

closed = insert_into_host(tangle, zero_tangle(), "N")
print("For instance, the zero-tangle host recovers determinant",
      determinant(closed))
host = rational_tangle([2, -1, 3])
closed = insert_into_host(tangle, host, "N")
print("A random rational host gives a", len(components(closed)),
      "component diagram with determinant", determinant(closed))

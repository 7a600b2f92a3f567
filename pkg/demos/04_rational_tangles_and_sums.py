"""Rational tangle calculus, and certifying a tangle plus its mirror.

A twist vector [a1, ..., an] builds a tangle by alternating twist rows; its
continued fraction an + 1/(a_{n-1} + ... + 1/a1) classifies the tangle, and
the two closure determinants recover |numerator| and |denominator|.

Summing a rational tangle with its mirror image produces a persistent
tangle whenever certificates can exist at all, and the certificate modulus
divides the square of the fraction's denominator.
"""

from tanglecert import (
    CertificateNotFound,
    build_T_plus_Tstar,
    denominator_closure,
    krebes_gcd,
    link_determinant,
    mirror,
    numerator_closure,
    rational_tangle,
    tangle_add,
    tangle_fraction,
    verify_certificate,
)

print("Twist vectors, fractions, and closure determinants:")
for w in ([3], [2, 2], [3, 1, 2], [2, 1, 1], [-2, 3]):
    t = rational_tangle(w)
    f = tangle_fraction(w)
    n = link_determinant(numerator_closure(t))
    d = link_determinant(denominator_closure(t))
    print(f"  {str(w):12s} fraction {str(f):6s} closure determinants ({n}, {d})")

print("\n[3] closes to the trefoil; [2,2] to the figure-8 knot;")
print("[3,1,2] to a determinant-11 knot.")

print("\nKrebes' tangle is a 3-twist column plus its mirror image:")
column = rational_tangle([3, 0])
kreb = tangle_add(column, mirror(column))
print("  closure determinants:",
      link_determinant(numerator_closure(kreb)),
      link_determinant(denominator_closure(kreb)),
      "-> gcd", krebes_gcd(kreb))

s, cert = build_T_plus_Tstar([3, 0])
rep = verify_certificate(s, cert, trials=100, seed=1)
print(f"  certificate mod {cert.kind[1]}, verified on {rep.passes} host closures")

print("\nThe same works for any odd twist column:")
for p in (5, 7):
    s, cert = build_T_plus_Tstar([p, 0])
    print(f"  column of {p}: certificate mod {cert.kind[1]}")

print("\nAn integer tangle is the degenerate case: its mirror cancels it")
print("(opposite twists undo by R2 moves), so no certificate can exist:")
try:
    build_T_plus_Tstar([3])
except CertificateNotFound as exc:
    print("  [3]:", exc)

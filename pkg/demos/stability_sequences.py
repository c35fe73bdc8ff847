"""Plethysm coefficient sequences and their tails.

Inner sequences (Q_lam o Q_{p mu}, Q_{s nu}) stabilise; outer sequences
(Q_{p lam} o Q_mu, Q_{s nu}) stabilise when mu has several parts and grow
linearly when mu is a single row.
"""

from qgamma import partial_fraction, sequence_inner, sequence_outer
from qgamma.gamma_ring import LaurentScalar


def show(report):
    print(report.kind, report.params)
    for e in report.entries:
        print(f"  p={e.p:2d}  s={e.s:3d}  value={e.value}")
    print("  tail:", report.classification.as_dict(), " guaranteed from p =", report.theorem_bound)


show(sequence_inner((2, 1), (2,), (4, 3, 2), 2, 9))
show(sequence_outer((1,), (2, 1), (3, 2), 1, 7))
show(sequence_outer((1,), (3,), (2, 1), 1, 7))

# generating series of this shape are Laurent polynomials plus poles at 1
H = LaurentScalar({3: 5, 1: -2})
r = partial_fraction(H, 2)
print("H/(1-Z)^2 =", r.laurent_part, "+ poles", r.pole_coefficients)

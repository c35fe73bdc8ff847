"""The twisted vertex operator adds a part to the front of Q_lam.

The z^p coefficient of kappa_z kappa_{-1/z}^perp Q_lam is Q_{p lam} for
every integer p, including negative p and p equal to an existing part.
"""

from qgamma import q_lambda, straighten, to_q_basis, vertex_apply
from qgamma.partitions import prepend

lam = (3, 1)
coeffs = vertex_apply(q_lambda(lam), -4, 5)
for p, G in coeffs.items():
    c, tau = straighten(prepend(p, lam))
    rule = f"{c} * Q{tau}" if c else "0"
    print(f"p = {p:2d}: {to_q_basis(G)}   straightening says {rule}")

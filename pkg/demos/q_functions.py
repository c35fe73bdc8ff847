"""Building Schur Q-functions from scratch.

Everything lives in the odd power sums p1, p3, p5, ...  The complete
Q-functions q_n come first; Q_lam for any integer composition is then a
Pfaffian of two-row functions Q_(r,s).
"""

from qgamma import inner, pfaffian, q_lambda, q_rs, qgen, straighten, to_q_basis
from qgamma.schur_q import q_matrix

# q_n in power sums
for n in range(1, 5):
    print(f"q_{n} =", qgen(n))

# two-row functions; Q_(1,1) vanishes because (1,1) is not strict
print("Q_(2,1) =", q_rs(2, 1))
print("Q_(1,1) =", q_rs(1, 1))

# a three-part index is padded with a zero part and becomes a 4x4 Pfaffian
M = q_matrix((3, 2, 1))
print("Pf M(3,2,1) equals Q_(3,2,1):", pfaffian(M) == q_lambda((3, 2, 1)))

# compositions need not be partitions; straightening explains the answer
for comp in [(2, 3), (2, 2), (-3, 3, 1), (0, 2)]:
    c, tau = straighten(comp)
    print(f"Q_{comp} = {c} * Q_{tau}" if c else f"Q_{comp} = 0")

# the Q basis is orthogonal with (Q_lam, Q_lam) = 2^l(lam)
print("(Q_(3,2), Q_(3,2)) =", inner(q_lambda((3, 2)), q_lambda((3, 2))))
print("(Q_(3), Q_(2,1)) =", inner(q_lambda((3,)), q_lambda((2, 1))))

# and any element of Gamma can be written back in it
print("q_2 q_1 =", to_q_basis(qgen(2) * qgen(1)))

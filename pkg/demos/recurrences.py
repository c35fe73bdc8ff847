"""Recurrences for q_n o q_m under the part-removal operator D_k."""

from qgamma.recurrence import bk_terms, verify_bk, verify_master, verify_max_first_part, verify_murnaghan
from qgamma.schur_q import to_q_basis

rep = verify_bk(3, 2, 1)
print("D_1(q_3 o q_2) =", to_q_basis(rep.lhs))
print("equal:", rep.equal, " nonzero (I, J) terms:", rep.term_count)

# a few individual terms, each a polynomial in the q_n
for key in [((0, 0), (0, 2)), ((2, 0), (0, 1)), ((0, 0), (0, 1))]:
    print(key, to_q_basis(bk_terms(3, 2, 1)[key]))

print("Murnaghan form (3,2,1):", verify_murnaghan(3, 2, 1).equal)
# stopping the p-sum at n - k loses terms once m > 1
print("literal n-k bound at (2,2,2):", verify_murnaghan(2, 2, 2, literal_bound=True).equal)
print("master identity m=2, k=1 up to weight 8:", verify_master(2, 1, 8).equal)
print("maximal first part, n=2, lam=(3,2,1):", verify_max_first_part(2, (3, 2, 1)).equal)

"""Plethysms of complete Q-functions, q_n o q_m, in the Q basis."""

from qgamma import GammaElement, pleth, qgen, to_q_basis
from qgamma.partitions import format_partition


def show(n, m):
    E = to_q_basis(pleth(qgen(n), qgen(m)))
    terms = " + ".join(f"{c}*Q[{format_partition(lam)}]" for lam, c in E.items())
    print(f"q_{n}(q_{m}) = {terms}")


for m in range(1, 5):
    show(2, m)
for m in range(1, 4):
    show(3, m)

# scalars act as multiples of an alphabet: q_n of two copies of z is 4n z^n
for n in range(1, 5):
    print(f"q_{n}(2z) =", pleth(qgen(n), GammaElement.letter(2, 1)))

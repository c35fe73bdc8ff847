from fractions import Fraction

from hypothesis import strategies as st

from qgamma import GammaElement
from qgamma.partitions import odd_partitions, strict_partitions_upto

ODD = [mu for n in range(0, 7) for mu in odd_partitions(n)]
STRICT_8 = strict_partitions_upto(8)

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def gamma_elements(draw, max_terms=4, with_z=False):
    """Random elements of Gamma (weight <= 6), optionally with z powers."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mu = draw(st.sampled_from(ODD))
        e = draw(st.integers(-3, 3)) if with_z else 0
        terms[(mu, e)] = draw(small_fractions)
    return GammaElement(terms)


strict_8 = st.sampled_from(STRICT_8)
alphabets = st.lists(st.integers(-5, 5).filter(bool).map(Fraction), min_size=1, max_size=4)

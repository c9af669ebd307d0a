from hypothesis import strategies as st

from smippc.code import Code


@st.composite
def small_codes(draw, n=None, max_q=4, max_m=7):
    n = draw(st.integers(1, 3)) if n is None else n
    q = draw(st.integers(2, max_q))
    words = draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * n), min_size=1,
                          max_size=min(max_m, q ** n), unique=True))
    return Code(n, q, tuple(words))

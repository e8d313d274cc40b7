"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from tlinks.braidcore import BraidWord
from tlinks.lorenz import LorenzVector


@st.composite
def braids(draw, max_strands=6, max_len=14):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1)
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)
    )
    return BraidWord(n, tuple(letters))


@st.composite
def vectors(draw, max_p=8, max_d=8):
    ds = draw(st.lists(st.integers(2, max_d), min_size=1, max_size=4, unique=True).map(sorted))
    ss = [draw(st.integers(1, 3)) for _ in ds]
    while sum(ss) > max_p:
        i = ss.index(max(ss))
        if ss[i] == 1:
            ds, ss = ds[:-1], ss[:-1]
        else:
            ss[i] -= 1
    return LorenzVector(tuple(zip(ds, ss)))

from math import gcd

from hypothesis import strategies as st

from besse.seifert import SeifertInvariants, euler_number


@st.composite
def pairs(draw, max_a=12, max_b=30):
    a = draw(st.integers(1, max_a))
    b = draw(st.integers(-max_b, max_b).filter(lambda b: a == 1 or gcd(a, b) == 1))
    return a, b


@st.composite
def invariants(draw, max_pairs=5, max_a=12, genus=st.integers(-4, 4)):
    ps = draw(st.lists(pairs(max_a=max_a), max_size=max_pairs))
    return SeifertInvariants(draw(genus), tuple(ps))


@st.composite
def realizable_invariants(draw, **kw):
    s = draw(invariants(**kw))
    if euler_number(s) == 0:
        # a zero Euler number moves to -1 or +1
        s = SeifertInvariants(s.genus, s.pairs + ((1, draw(st.sampled_from([-1, 1]))),))
    return s

from hypothesis import strategies as st

from hopfperm.perm_core import Permutation, Subset


@st.composite
def perms(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_pairs(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    a = draw(st.permutations(range(1, n + 1)))
    b = draw(st.permutations(range(1, n + 1)))
    return Permutation(a), Permutation(b)


@st.composite
def subsets_of(draw, n):
    members = draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    return Subset(sorted(members), n)


@st.composite
def perm_and_subset(draw, min_n=0, max_n=6):
    u = draw(perms(min_n, max_n))
    return u, draw(subsets_of(len(u)))

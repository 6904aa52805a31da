import hypothesis.strategies as st
from hypothesis import settings

from tauseq.algebras import cyclic, gamma, indecomposables

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def supported_algebras(n_max: int = 8) -> list:
    """The four counting families plus leaves, every rank up to n_max."""
    out = set()
    for n in range(1, n_max + 1):
        for t in (1, 2, n - 1, n):
            if 1 <= t <= n:
                out.add(gamma(n, t))
                out.add(cyclic(n, t))
    out.add(cyclic(1, 2))
    return sorted(out)


algebra_ids = st.sampled_from(supported_algebras())

cyclic_ids = st.sampled_from([A for A in supported_algebras() if not A.is_gamma])


@st.composite
def algebra_with_module(draw, ids=algebra_ids):
    A = draw(ids)
    M = draw(st.sampled_from(indecomposables(A)))
    return A, M


@st.composite
def algebra_with_two_modules(draw, ids=algebra_ids):
    A = draw(ids)
    mods = indecomposables(A)
    return A, draw(st.sampled_from(mods)), draw(st.sampled_from(mods))

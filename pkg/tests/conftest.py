import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ballotperm.perms import cycles_to_permutation, is_ballot

settings.register_profile(
    "default", deadline=None, max_examples=200,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.register_profile("ci", parent=settings.get_profile("default"), derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def perms(min_n=0, max_n=10):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def ballot_perms(max_n=10):
    return perms(0, max_n).filter(is_ballot)


@st.composite
def odd_order_perms(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    letters = draw(st.permutations(range(1, n + 1)))
    cycles, i = [], 0
    while i < n:
        size = draw(st.sampled_from([k for k in range(1, n - i + 1, 2)]))
        cycles.append(tuple(letters[i:i + size]))
        i += size
    return cycles_to_permutation(cycles, n)

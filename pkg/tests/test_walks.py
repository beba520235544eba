import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballotperm.walks import (
    BRUTE_MAX_N, STEPS, F, H, axis_point, axis_total, brute_count, catalan, count_walks, gb_axis_closed_form,
    gessel_closed_form, step_dp, walk_table,
)
from ballotperm.patterns import avoid_count

GESSEL = [1, 2, 11, 85, 782, 8004, 88044, 1020162, 12294260]


def test_zero_steps():
    assert count_walks("gessel", 0, (0, 0), (0, 0)) == 1
    assert count_walks("gessel", 0, (0, 1), (0, 0)) == 0
    assert F(0, 0, 0) == 1 and F(0, 2, 2) == 1 and F(0, 1, 0) == 0
    assert H(0, 3, 3) == 1 and H(0, 0, 1) == 0


def test_two_step_excursions():
    for method in ("step_dp", "recurrence", "brute"):
        assert count_walks("gessel", 2, (0, 0), (0, 0), method) == 2
    assert sum(count_walks("gessel", 2, (0, 0), (0, j)) for j in range(3)) == 3 == avoid_count("ballot", 3, (2, 1, 3))


def test_gessel_closed_form():
    assert [gessel_closed_form(n) for n in range(9)] == GESSEL
    assert all(isinstance(gessel_closed_form(n), int) for n in range(9))
    for n in range(9):
        assert count_walks("gessel", 2 * n, (0, 0), (0, 0)) == GESSEL[n]


def test_gb_axis_totals():
    for n in range(11):
        expected = catalan((n + 1) // 2) * catalan((n + 2) // 2)
        assert gb_axis_closed_form(n) == axis_total("gb", n) == expected


def test_gb_stays_below_diagonal():
    for layer in step_dp("gb", 10, (0, 0)):
        assert all(y <= x and y >= 0 for x, y in layer)
    for layer in step_dp("gessel", 10, (0, 2)):
        assert all(x >= 0 and y >= 0 for x, y in layer)


def test_axis_points():
    assert axis_point("gessel", 3) == (0, 3)
    assert axis_point("gb", 3) == (3, 0)


@pytest.mark.parametrize("kind", list(STEPS))
def test_methods_agree(kind):
    for n in range(9):
        for h in range(4):
            for b in range(4):
                s, e = axis_point(kind, h), axis_point(kind, b)
                vals = {m: count_walks(kind, n, s, e, m) for m in ("step_dp", "recurrence", "brute")}
                assert len(set(vals.values())) == 1, vals


def test_parity_regression():
    # both step sets change x+y by an odd amount or by 2, so parity of n matters
    assert F(3, 0, 0) == 0 and count_walks("gessel", 3, (0, 0), (0, 0)) == 0
    assert H(3, 0, 0) == 0


def test_table_lookup_defaults_to_zero():
    t = walk_table("gessel", 4, 3)
    assert t[2, 0, 0] == 2
    assert t[99, 0, 0] == 0


def test_errors():
    with pytest.raises(ValueError):
        brute_count("gessel", BRUTE_MAX_N + 1, (0, 0), (0, 0))
    with pytest.raises(ValueError):
        count_walks("gessel", -1, (0, 0), (0, 0))
    with pytest.raises(ValueError):
        count_walks("king", 2, (0, 0), (0, 0))
    with pytest.raises(ValueError):
        count_walks("gb", 2, (0, 1), (0, 0))       # start above the diagonal


@given(st.sampled_from(list(STEPS)), st.integers(0, 14), st.integers(0, 6), st.integers(0, 6))
def test_recurrence_equals_dp(kind, n, h, b):
    s, e = axis_point(kind, h), axis_point(kind, b)
    assert count_walks(kind, n, s, e, "recurrence") == count_walks(kind, n, s, e, "step_dp")


@given(st.integers(0, 12), st.integers(0, 6), st.integers(0, 6))
def test_gessel_reversal_symmetry(n, h, b):
    # reversing a walk swaps the step pairs, so the step set maps to itself
    assert F(n, h, b) == F(n, b, h)

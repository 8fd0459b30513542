import pytest
from hypothesis import given, strategies as st

from permclass import perms
from permclass.perms import (Basis, Perm, contains, contains_ending_at_last,
                             parse_perm)

perm_strategy = st.permutations(range(1, 8)).map(
    lambda xs: Perm(tuple(xs)))


def test_parse_and_format_round_trip():
    for text in ("", "1", "2413", "35142"):
        assert str(parse_perm(text)) == text
    long = "11,2,1,3,4,5,6,7,8,9,10"
    assert str(parse_perm(long)) == long


def test_invalid_permutation_rejected():
    with pytest.raises(perms.InvalidPermutationError):
        Perm((1, 3))
    with pytest.raises(perms.InvalidPermutationError):
        Perm((1, 1, 2))


def test_standardize():
    assert perms.standardize((6, 4, 7)) == parse_perm("213")
    assert perms.standardize(()) == perms.EMPTY


def test_contains_known_cases():
    host = parse_perm("64357218")
    assert contains(host, parse_perm("231"))
    assert not contains(host, parse_perm("132"))
    assert contains(parse_perm("2413"), parse_perm("2413"))
    assert not contains(parse_perm("241365"), parse_perm("3412"))
    assert contains(parse_perm("35142"), parse_perm("2413"))


@given(perm_strategy)
def test_contains_is_reflexive_and_empty_pattern_trivial(p):
    assert contains(p, p)
    assert contains(p, perms.EMPTY)


@given(perm_strategy, st.sampled_from(["2413", "3412", "1432", "2143"]))
def test_contains_ending_at_last_consistent(p, pattern_text):
    """An occurrence ending at the last entry implies containment, and
    containment of the child without one in the parent implies one."""
    pattern = parse_perm(pattern_text)
    if contains_ending_at_last(p, pattern):
        assert contains(p, pattern)
    elif contains(p, pattern):
        prefix = perms.standardize(p.entries[:-1])
        assert contains(prefix, pattern)


def test_basis_rejects_non_antichain():
    with pytest.raises(ValueError):
        Basis([parse_perm("12"), parse_perm("123")])


def test_skew_components():
    assert perms.skew_components(parse_perm("321")) == [parse_perm("1")] * 3
    assert perms.skew_components(parse_perm("2413")) == [parse_perm("2413")]
    assert perms.skew_components(parse_perm("45312")) == [
        parse_perm("12"), parse_perm("1"), parse_perm("12")]


def test_skew_sum_and_direct_sum():
    assert perms.skew_sum(parse_perm("231"), parse_perm("21")) == \
        parse_perm("45321")
    assert perms.direct_sum(parse_perm("12"), parse_perm("21")) == \
        parse_perm("1243")


@given(perm_strategy)
def test_skew_components_recompose(p):
    parts = perms.skew_components(p)
    out = perms.EMPTY
    for part in parts:
        out = perms.skew_sum(out, part)
    assert out == p


def test_statistics_small_cases():
    assert perms.initial_decreasing_run(parse_perm("64357218")) == 3
    assert perms.trailing_increasing_run(parse_perm("14235")) == 3
    assert perms.gap_count(parse_perm("14235")) == 4
    assert [perms.marked_trailing_run(parse_perm(s))
            for s in ("12", "21", "1", "213", "312")] == [1, 0, 0, 1, 1]
    with pytest.raises(ValueError):
        perms.gap_count(perms.EMPTY)


def test_slices_and_minima():
    p = parse_perm("11,14,6,7,10,8,12,2,5,3,9,4,13,1")
    assert perms.slice_count(p) == 4
    assert len(perms.slices(p)) == 4
    assert perms.left_to_right_minima(parse_perm("321")) == [1, 2, 3]


@given(perm_strategy)
def test_marked_trailing_run_bounds(p):
    r = perms.trailing_increasing_run(p)
    m = perms.marked_trailing_run(p)
    assert m in (r, r - 1)
    assert 0 <= m < len(p) + 1

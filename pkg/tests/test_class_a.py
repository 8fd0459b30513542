import pytest

from permclass import class_a, oracle, perms
from permclass.series import BivariateSeries

from conftest import golden_text


def test_counts_small():
    assert class_a.counts(class_a.iterate(6)) == [1, 1, 2, 6, 22, 90, 395]


def test_counts_match_fe_golden_40(state_a60):
    got = "".join("%d\t%d\n" % (n, c)
                  for n, c in enumerate(class_a.counts(state_a60)[:41]))
    assert got == golden_text("class_a_fe_counts_40.tsv")


def test_counts_match_oracle_golden(state_a60):
    golden = oracle.parse_counts(golden_text("class_a_counts.tsv"))
    assert class_a.counts(state_a60)[:len(golden)] == golden


def test_equation_residuals(state_a60):
    res2, res3 = class_a.equation_residuals(state_a60)
    assert res2 > state_a60.order
    assert res3 > state_a60.order


def test_bivariate_matches_oracle_distribution():
    st = class_a.iterate(8)
    rep = oracle.statistic_distribution(perms.CLASS_A_BASIS, 8,
                                        "initial_decreasing_run")
    for n in range(9):
        row = rep.distributions["initial_decreasing_run"][n]
        for k in range(n + 1):
            assert st.f.coefficient(n, k) == (row[k] if k < len(row) else 0)


def test_fskew_counts_skew_indecomposables():
    """fskew(z,1) counts the skew-indecomposable avoiders of length at
    least 2, checked against the oracle's explicit permutations."""
    st = class_a.iterate(7)
    f1skew = st.fskew.subst_t(1)
    for n in range(2, 8):
        explicit = [p for p in oracle.filter_all_avoiders(
            perms.CLASS_A_BASIS, n) if perms.is_skew_indecomposable(p)]
        assert f1skew.c[n] == len(explicit)
    assert f1skew.c[0] == 0 and f1skew.c[1] == 0


def test_omega_raises_z_order():
    st = class_a.iterate(10)
    f1 = st.f.subst_t(1)
    w = BivariateSeries.t_monomial(3, 10).shift(4)
    image = class_a.omega_apply(w, st.f, f1)
    valuation = next(n for n, row in enumerate(image.c) if any(row))
    assert valuation >= 4 + 2  # prefactor z * (f-1) adds two z-orders


def test_nonnegative_integer_invariant(state_a60):
    for row in state_a60.f.c:
        for x in row:
            assert isinstance(x, int) and x >= 0


def test_consistency_check_catches_bad_state():
    st = class_a.iterate(5)
    broken = BivariateSeries([list(r) for r in st.f.c], st.order)
    broken.c[3][1] = -broken.c[3][1]
    with pytest.raises(class_a.ConsistencyError):
        class_a._check_state(st.order, broken, st.fskew)

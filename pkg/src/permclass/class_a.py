"""Polynomial-time enumeration of Av(2413,3412).

The class is generated by its skew-indecomposable members: every
permutation is a skew sum of skew-indecomposable layers, and appending
a layer acts on the generating function as a linear operator on
monomials in the catalytic variable t, which marks the length of the
initial decreasing run.  Writing f(z,t) for the class and fskew(z,t)
for its skew-indecomposable members of length at least two,

    fskew = z f(z,1) (f(z,t) - 1) + Omega[fskew]
    f     = 1/(1-zt) + fskew / ((1-zt)(1-z))

where Omega: t^k -> (z/(1-z)) (f(z,t)-1) sum_{j=0}^{k} t^j f(z,1)^{k-j}.

Both right-hand sides strictly raise z-order, so one sweep per z-order
computes the pair exactly to any truncation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .series import BivariateSeries, UnivariateSeries


@dataclass(frozen=True)
class ClassAState:
    """f, fskew computed exactly to the truncation order."""

    order: int
    f: BivariateSeries
    fskew: BivariateSeries


def omega_apply(w: BivariateSeries, f: BivariateSeries,
                f1: UnivariateSeries) -> BivariateSeries:
    """The layer-adding operator applied monomial-wise to w.

    Regrouped by the power of t in the image: with w = sum_k w_k(z) t^k,

        Omega[w] = (z/(1-z)) (f-1) sum_j t^j H_j,   H_j = w_j + f1 H_{j+1}

    (H computed top-down), which needs one univariate product per
    t-power instead of one per monomial.
    """
    order = w.order
    tmax = max(len(r) for r in w.c) - 1
    cols = [UnivariateSeries([w.coefficient(n, j) for n in range(order + 1)],
                             order)
            for j in range(tmax + 1)]
    h = [None] * (tmax + 1)
    h[tmax] = cols[tmax]
    for j in range(tmax - 1, -1, -1):
        h[j] = cols[j] + f1 * h[j + 1]
    g = BivariateSeries([[h[j].c[n] for j in range(tmax + 1)]
                         for n in range(order + 1)], order)
    pref = UnivariateSeries.geometric(1, order).shift(1)  # z/(1-z)
    return ((f - 1) * g) * pref


def iterate(n_max: int) -> ClassAState:
    """Compute f and fskew exactly to order n_max.

    The sweep at order s works at truncation s: all inputs are exact to
    order s-1 and every right-hand-side term carries a factor of z, so
    the outputs are exact to order s.

    >>> iterate(4).f.subst_t(1).c
    [1, 1, 2, 6, 22]
    """
    f = BivariateSeries.one(0)
    fskew = BivariateSeries.zero(0)
    for s in range(1, n_max + 1):
        f = BivariateSeries([list(r) for r in f.c], s)
        fskew = BivariateSeries([list(r) for r in fskew.c], s)
        f1 = f.subst_t(1)
        fskew = ((f - 1) * f1).shift(1) + omega_apply(fskew, f, f1)
        inv_zt = BivariateSeries.geometric_tz(s)
        inv_z = UnivariateSeries.geometric(1, s)
        f = inv_zt + (fskew * inv_zt) * inv_z
    _check_state(n_max, f, fskew)
    return ClassAState(order=n_max, f=f, fskew=fskew)


class ConsistencyError(ArithmeticError):
    """A coefficient came out non-integral or negative: the iteration
    no longer counts anything."""


def _check_state(order: int, f: BivariateSeries,
                 fskew: BivariateSeries) -> None:
    for series in (f, fskew):
        for n, row in enumerate(series.c):
            if len(row) - 1 > n and any(row[n + 1:]):
                raise ConsistencyError(
                    "t-degree exceeds length at z^%d" % n)
            for x in row:
                if not isinstance(x, int) or x < 0:
                    raise ConsistencyError(
                        "non-integer or negative coefficient at z^%d: %r"
                        % (n, x))


def counts(state: ClassAState) -> list[int]:
    """The counting sequence |Av_n(2413,3412)| for n = 0..order.

    >>> counts(iterate(6))
    [1, 1, 2, 6, 22, 90, 395]
    """
    f1 = state.f.subst_t(1)
    return [int(x) for x in f1.c]


def equation_residuals(state: ClassAState) -> tuple[int, int]:
    """z-order of the first violated coefficient of each defining
    equation (order+1 for both means the state satisfies them through
    the truncation)."""
    f, fskew = state.f, state.fskew
    f1 = f.subst_t(1)
    rhs2 = ((f - 1) * f1).shift(1) + omega_apply(fskew, f, f1)
    inv_zt = BivariateSeries.geometric_tz(state.order)
    inv_z = UnivariateSeries.geometric(1, state.order)
    rhs3 = inv_zt + (fskew * inv_zt) * inv_z
    return _first_diff(fskew, rhs2), _first_diff(f, rhs3)


def _first_diff(a: BivariateSeries, b: BivariateSeries) -> int:
    d = a - b
    for n, row in enumerate(d.c):
        if any(row):
            return n
    return d.order + 1


def fskew_at_f1(state: ClassAState) -> UnivariateSeries:
    """The substitution fskew(z, f(z,1)), the combination annihilated
    by the degree-3-in-g algebraic relation."""
    return state.fskew.subst_t(state.f.subst_t(1))

"""Polynomial-time enumeration of Av(1432,2143).

Permutations are built by adding a new bottom slice below an avoider,
and the recursion tracks the catalytic variable t marking the usable
gaps of the trailing increasing run (the run minus its minimum entry;
see perms.marked_trailing_run).  With f(z,t) the class series and
s(z,t) the single-slice series, the three ways a new slice can attach
give

    f = 1 + Phi[f] + Psi[Theta[f]] + Xi[Lambda[f]]

with the linear monomial operators

    Phi:    t^k -> s(z,t) (1 + t + ... + t^k)
    Theta:  t^k -> t + ... + t^k                  (t^0 -> 0)
    Psi:    t^k -> [t^2 z^4 / ((1-z)^2 (1-tz)(1-(1+t)z))] (1 + ... + t^{k-1})
    Lambda: t^k -> [z/(1-2z)] (t + ... + t^k)
    Xi:     t^k -> [tz/(1-tz)] sum_{j=0}^{k-1} t^{k-1-j} / (1-z)^j

Every image strictly raises z-order, so one sweep per z-order computes
f exactly to any truncation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .series import BivariateSeries, SeriesError, UnivariateSeries


@dataclass(frozen=True)
class ClassBState:
    """f computed exactly to the truncation order, together with the
    materialized single-slice series."""

    order: int
    f: BivariateSeries
    s: BivariateSeries


def s_series(order: int) -> BivariateSeries:
    """The single-slice series

        s = z/(1-tz) + t z^3/((1-2z)(1-tz)^2)
            + t^2 z^5/((1-z)^2 (1-tz)^2 (1-(1+t)z)),

    counting avoiders that start with their minimum, by length and
    marked trailing run.

    >>> s_series(3).c
    [[0], [1], [0, 1], [0, 1, 1]]
    """
    inv_tz = BivariateSeries.geometric_tz(order)
    inv_z = UnivariateSeries.geometric(1, order)
    inv_2z = UnivariateSeries.geometric(2, order)
    inv_1pt = BivariateSeries([[1], [-1, -1]], order).inverse()  # 1/(1-(1+t)z)
    term1 = inv_tz.shift(1)
    term2 = ((inv_tz * inv_tz) * inv_2z).shift(3).mul_tpoly([0, 1])
    term3 = ((((inv_tz * inv_tz) * inv_1pt) * (inv_z * inv_z))
             .shift(5).mul_tpoly([0, 0, 1]))
    return term1 + term2 + term3


def _columns(w: BivariateSeries) -> tuple[int, list[list]]:
    """(tmax, column list): column j holds the z-coefficients of t^j."""
    tmax = max(len(r) for r in w.c) - 1
    cols = [[w.coefficient(n, j) for n in range(w.order + 1)]
            for j in range(tmax + 1)]
    return tmax, cols


def _suffix_sums(w: BivariateSeries) -> tuple[int, list[UnivariateSeries]]:
    """S_j(z) = sum_{k >= j} w_k(z) for j = 0..tmax+1 (last one zero)."""
    tmax, cols = _columns(w)
    sums: list[UnivariateSeries] = [UnivariateSeries.zero(w.order)]
    acc = [0] * (w.order + 1)
    out = []
    for j in range(tmax, -1, -1):
        acc = [a + b for a, b in zip(acc, cols[j])]
        out.append(UnivariateSeries(list(acc), w.order))
    sums = out[::-1] + [UnivariateSeries.zero(w.order)]
    return tmax, sums


def _from_columns(cols: list[UnivariateSeries],
                  order: int) -> BivariateSeries:
    return BivariateSeries([[col.c[n] for col in cols]
                            for n in range(order + 1)], order)


def phi_apply(w: BivariateSeries, s: BivariateSeries) -> BivariateSeries:
    """Phi[w] = s(z,t) * sum_j t^j S_j with S_j the suffix column sums."""
    tmax, sums = _suffix_sums(w)
    return s * _from_columns(sums[:tmax + 1], w.order)


def theta_apply(w: BivariateSeries) -> BivariateSeries:
    """Theta[w] = sum_{j>=1} t^j S_j (the t^0 monomial maps to zero)."""
    tmax, sums = _suffix_sums(w)
    cols = [UnivariateSeries.zero(w.order)] + sums[1:tmax + 1]
    return _from_columns(cols, w.order)


def psi_apply(w: BivariateSeries) -> BivariateSeries:
    """Psi[w] = [t^2 z^4 / ((1-z)^2 (1-tz)(1-(1+t)z))] sum_j t^j S_{j+1}."""
    tmax, sums = _suffix_sums(w)
    body = _from_columns(sums[1:tmax + 1] or [sums[-1]], w.order)
    order = w.order
    inv_z = UnivariateSeries.geometric(1, order)
    inv_tz = BivariateSeries.geometric_tz(order)
    inv_1pt = BivariateSeries([[1], [-1, -1]], order).inverse()
    pref = ((inv_tz * inv_1pt) * (inv_z * inv_z)).shift(4).mul_tpoly(
        [0, 0, 1])
    return pref * body


def lambda_apply(w: BivariateSeries) -> BivariateSeries:
    """Lambda[w] = [z/(1-2z)] sum_{j>=1} t^j S_j."""
    return theta_apply(w) * UnivariateSeries.geometric(2, w.order).shift(1)


def xi_apply(w: BivariateSeries) -> BivariateSeries:
    """Xi[w] = [tz/(1-tz)] sum_i t^i H_i with
    H_i = sum_{k>=i+1} w_k /(1-z)^{k-1-i}, computed by the top-down
    chain H_i = w_{i+1} + H_{i+1}/(1-z)."""
    tmax, cols = _columns(w)
    order = w.order
    ucols = [UnivariateSeries(c, order) for c in cols]
    inv_z = UnivariateSeries.geometric(1, order)
    h = [UnivariateSeries.zero(order)] * (tmax + 1)
    for i in range(tmax - 1, -1, -1):
        h[i] = ucols[i + 1] + inv_z * h[i + 1]
    body = _from_columns(h if tmax else [h[0]], order)
    pref = BivariateSeries.geometric_tz(order).shift(1).mul_tpoly([0, 1])
    return pref * body


def iterate(n_max: int) -> ClassBState:
    """Compute f exactly to order n_max by one sweep per z-order.

    >>> iterate(4).f.subst_t(1).c
    [1, 1, 2, 6, 22]
    """
    s_full = s_series(n_max)
    f = BivariateSeries.one(0)
    for n in range(1, n_max + 1):
        f = BivariateSeries([list(r) for r in f.c], n)
        s = s_full.truncate(n)
        f = 1 + phi_apply(f, s) + psi_apply(theta_apply(f)) \
            + xi_apply(lambda_apply(f))
    _check_state(n_max, f)
    return ClassBState(order=n_max, f=f, s=s_full)


class ConsistencyError(ArithmeticError):
    """A coefficient came out non-integral or negative: the iteration
    no longer counts anything."""


def _check_state(order: int, f: BivariateSeries) -> None:
    for n, row in enumerate(f.c):
        if len(row) - 1 > n and any(row[n + 1:]):
            raise ConsistencyError("t-degree exceeds length at z^%d" % n)
        for x in row:
            if not isinstance(x, int) or x < 0:
                raise ConsistencyError(
                    "non-integer or negative coefficient at z^%d: %r"
                    % (n, x))


def counts(state: ClassBState) -> list[int]:
    """The counting sequence |Av_n(1432,2143)| for n = 0..order.

    >>> counts(iterate(6))
    [1, 1, 2, 6, 22, 89, 381]
    """
    return [int(x) for x in state.f.subst_t(1).c]


def case_decomposition(state: ClassBState
                       ) -> tuple[BivariateSeries, BivariateSeries,
                                  BivariateSeries]:
    """The three slice-addition case series (g_a, g_b, g_c) with
    f = 1 + g_a + g_b + g_c."""
    f, s = state.f, state.s
    return (phi_apply(f, s), psi_apply(theta_apply(f)),
            xi_apply(lambda_apply(f)))


def auxiliary_series(state: ClassBState
                     ) -> tuple[UnivariateSeries, UnivariateSeries,
                                UnivariateSeries]:
    """(f(z,1), f_t(z,1), f(z,1/(1-z))): the specializations appearing
    in the kernel relation."""
    f1 = state.f.subst_t(1)
    ft1 = state.f.deriv_t_at_1()
    frecip = state.f.subst_t(UnivariateSeries.geometric(1, state.order))
    return f1, ft1, frecip

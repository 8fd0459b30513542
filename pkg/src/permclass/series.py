"""Exact truncated power series in z, univariate or with polynomial-in-t
coefficients.

Coefficients are exact rationals (Python ints or Fractions; all
arithmetic stays exact).  Every binary operation truncates to the
minimum order of its operands and never extends an operand with
fabricated zeros.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Union

from . import _kernels

Coeff = Union[int, Fraction]


class SeriesError(ValueError):
    pass


def _as_exact(x) -> Coeff:
    if isinstance(x, (int, Fraction)):
        return x
    raise SeriesError("coefficients must be exact rationals, got %r" % (x,))


class UnivariateSeries:
    """A power series in z truncated at order N (coefficients of
    z^0..z^N are known)."""

    __slots__ = ("order", "c")

    def __init__(self, coeffs: Sequence[Coeff], order: int | None = None):
        coeffs = [_as_exact(x) for x in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("truncation order must be >= 0")
        coeffs = coeffs[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.c = coeffs

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "UnivariateSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "UnivariateSeries":
        return cls([1], order)

    @classmethod
    def z(cls, order: int) -> "UnivariateSeries":
        return cls([0, 1], order)

    @classmethod
    def geometric(cls, a: Coeff, order: int) -> "UnivariateSeries":
        """1/(1 - a z) expanded to the requested order."""
        out = [1]
        for _ in range(order):
            out.append(out[-1] * a)
        return cls(out, order)

    # -- ring operations ---------------------------------------------

    def _common(self, other: "UnivariateSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.c)
            out[0] += other
            return UnivariateSeries(out, self.order)
        if not isinstance(other, UnivariateSeries):
            return NotImplemented  # defer to BivariateSeries.__radd__
        n = self._common(other)
        return UnivariateSeries(
            [self.c[i] + other.c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return UnivariateSeries([-x for x in self.c], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariateSeries([x * other for x in self.c], self.order)
        if not isinstance(other, UnivariateSeries):
            return NotImplemented  # defer to BivariateSeries.__rmul__
        n = self._common(other)
        return UnivariateSeries(_kernels.series_mul(self.c, other.c, n), n)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UnivariateSeries":
        """Multiply by z^k (truncation order unchanged)."""
        return UnivariateSeries([0] * k + self.c, self.order)

    def inverse(self) -> "UnivariateSeries":
        """Multiplicative inverse; requires a unit constant term."""
        a0 = self.c[0]
        if a0 == 0:
            raise SeriesError("series with zero constant term has no inverse")
        # reciprocals of +-1 stay integers, anything else turns rational
        inv0 = a0 if a0 == 1 or a0 == -1 else Fraction(1, 1) / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            s = 0
            for k in range(1, min(n, len(self.c) - 1) + 1):
                s += self.c[k] * out[n - k]
            out.append(-s * inv0)
        return UnivariateSeries(out, self.order)

    def __truediv__(self, other: "UnivariateSeries"):
        return self * other.inverse()

    def pow_trunc(self, e: int) -> "UnivariateSeries":
        out = UnivariateSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    # -- access ------------------------------------------------------

    def coefficient(self, n: int) -> Coeff:
        if n > self.order:
            raise SeriesError("coefficient beyond truncation order")
        return self.c[n]

    def truncate(self, order: int) -> "UnivariateSeries":
        if order > self.order:
            raise SeriesError("cannot extend truncation order")
        return UnivariateSeries(self.c[:order + 1], order)

    def valuation(self) -> int:
        """z-order of the first nonzero coefficient; order+1 if zero."""
        for n, x in enumerate(self.c):
            if x:
                return n
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.c, other.c))

    def __repr__(self):
        head = ", ".join(str(x) for x in self.c[:6])
        return "UnivariateSeries([%s%s], order=%d)" % (
            head, ", ..." if self.order > 5 else "", self.order)

    # -- text format -------------------------------------------------

    def serialize(self) -> str:
        """One line per z-order holding the rational coefficient."""
        return "\n".join(str(Fraction(x)) for x in self.c) + "\n"

    @classmethod
    def parse(cls, text: str) -> "UnivariateSeries":
        rows = [Fraction(line.strip()) for line in text.splitlines()
                if line.strip()]
        return cls([_intify(x) for x in rows], len(rows) - 1)


def _intify(x: Fraction) -> Coeff:
    return int(x) if x.denominator == 1 else x


def _tpoly_trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


class BivariateSeries:
    """A power series in z whose z^n coefficient is an exact polynomial
    in the catalytic variable t.

    For the counting series the t-degree of the z^n coefficient is at
    most n; the representation does not force this (polynomial inputs
    such as a bare ``t`` are allowed), callers assert it where it is an
    invariant.
    """

    __slots__ = ("order", "c")

    def __init__(self, tpolys: Sequence[Sequence[Coeff]],
                 order: int | None = None):
        rows = [[_as_exact(x) for x in row] for row in tpolys]
        if order is None:
            order = len(rows) - 1
        if order < 0:
            raise SeriesError("truncation order must be >= 0")
        rows = rows[:order + 1]
        rows += [[0] for _ in range(order + 1 - len(rows))]
        self.order = order
        self.c = [_tpoly_trim(r if r else [0]) for r in rows]

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls([[0]], order)

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        return cls([[1]], order)

    @classmethod
    def t_monomial(cls, k: int, order: int) -> "BivariateSeries":
        """The polynomial t^k viewed as a series."""
        return cls([[0] * k + [1]], order)

    @classmethod
    def geometric_tz(cls, order: int) -> "BivariateSeries":
        """1/(1 - t z) = sum t^n z^n."""
        return cls([[0] * n + [1] for n in range(order + 1)], order)

    @classmethod
    def from_univariate(cls, u: UnivariateSeries) -> "BivariateSeries":
        return cls([[x] for x in u.c], u.order)

    # -- ring operations ---------------------------------------------

    def _common(self, other: "BivariateSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            rows = [list(r) for r in self.c]
            rows[0][0] += other
            return BivariateSeries(rows, self.order)
        if isinstance(other, UnivariateSeries):
            other = BivariateSeries.from_univariate(other)
        n = self._common(other)
        rows = []
        for i in range(n + 1):
            a, b = self.c[i], other.c[i]
            m = max(len(a), len(b))
            rows.append([(a[j] if j < len(a) else 0)
                         + (b[j] if j < len(b) else 0) for j in range(m)])
        return BivariateSeries(rows, n)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return BivariateSeries([[-x for x in r] for r in self.c], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariateSeries(
                [[x * other for x in r] for r in self.c], self.order)
        if isinstance(other, UnivariateSeries):
            n = min(self.order, other.order)
            rows = []
            for m in range(n + 1):
                acc = [0] * max(len(self.c[i]) for i in range(m + 1))
                for i in range(m + 1):
                    s = other.c[m - i]
                    if s:
                        row = self.c[i]
                        for j, x in enumerate(row):
                            if x:
                                acc[j] += x * s
                rows.append(acc)
            return BivariateSeries(rows, n)
        n = self._common(other)
        rows = []
        for m in range(n + 1):
            width = max((len(self.c[i]) + len(other.c[m - i]) - 1
                         for i in range(m + 1)), default=1)
            acc = [0] * width
            for i in range(m + 1):
                _kernels.tpoly_mul_acc(acc, self.c[i], other.c[m - i])
            rows.append(acc)
        return BivariateSeries(rows, n)

    __rmul__ = __mul__

    def mul_tpoly(self, p: Sequence[Coeff]) -> "BivariateSeries":
        """Multiply by a polynomial in t (z-free)."""
        rows = []
        for r in self.c:
            acc = [0] * (len(r) + len(p) - 1)
            _kernels.tpoly_mul_acc(acc, r, list(p))
            rows.append(acc)
        return BivariateSeries(rows, self.order)

    def shift(self, k: int) -> "BivariateSeries":
        """Multiply by z^k."""
        return BivariateSeries([[0]] * k + [list(r) for r in self.c],
                               self.order)

    def inverse(self) -> "BivariateSeries":
        """Inverse when the z^0 coefficient is a nonzero constant."""
        head = self.c[0]
        if len(_tpoly_trim(list(head))) != 1 or head[0] == 0:
            raise SeriesError(
                "bivariate inverse needs a constant unit z^0 coefficient")
        a0 = head[0]
        inv0 = a0 if a0 in (1, -1) else Fraction(1, 1) / a0
        rows = [[inv0]]
        for n in range(1, self.order + 1):
            width = max((len(self.c[k]) + len(rows[n - k]) - 1
                         for k in range(1, n + 1)), default=1)
            acc = [0] * width
            for k in range(1, n + 1):
                _kernels.tpoly_mul_acc(acc, self.c[k], rows[n - k])
            rows.append([-x * inv0 for x in acc])
        return BivariateSeries(rows, self.order)

    # -- substitutions and derivatives -------------------------------

    def subst_t(self, value) -> UnivariateSeries:
        """Substitute for t either the constant 1 or a univariate series
        with nonzero constant term; exact, no truncation loss."""
        if value == 1:
            return UnivariateSeries([sum(r) for r in self.c], self.order)
        if not isinstance(value, UnivariateSeries):
            raise SeriesError("subst_t target must be 1 or a series")
        if value.c[0] == 0:
            raise SeriesError("subst_t series target needs nonzero "
                              "constant term")
        n = min(self.order, value.order)
        out = UnivariateSeries.zero(n)
        for m in range(n + 1):
            row = self.c[m]
            # Horner in t over the series ring
            pv = UnivariateSeries([row[-1]], n)
            for j in range(len(row) - 2, -1, -1):
                pv = pv * value + row[j]
            out = out + pv.shift(m)
        return out

    def deriv_t_at_1(self) -> UnivariateSeries:
        """The t-partial derivative evaluated at t = 1, termwise."""
        return UnivariateSeries(
            [sum(j * x for j, x in enumerate(r)) for r in self.c],
            self.order)

    # -- access ------------------------------------------------------

    def coefficient(self, n: int, k: int) -> Coeff:
        if n > self.order:
            raise SeriesError("coefficient beyond truncation order")
        row = self.c[n]
        return row[k] if k < len(row) else 0

    def tpoly(self, n: int) -> list:
        return list(self.c[n])

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self.order:
            raise SeriesError("cannot extend truncation order")
        return BivariateSeries([list(r) for r in self.c[:order + 1]], order)

    def max_t_degree(self) -> int:
        return max(len(_tpoly_trim(list(r))) - 1 for r in self.c)

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        for a, b in zip(self.c, other.c):
            m = max(len(a), len(b))
            for j in range(m):
                if (a[j] if j < len(a) else 0) != (b[j] if j < len(b) else 0):
                    return False
        return True

    def __repr__(self):
        return "BivariateSeries(order=%d)" % self.order

    # -- text format -------------------------------------------------

    def serialize(self) -> str:
        """One line per z-order: coefficients of t^0..t^deg separated by
        spaces."""
        return "\n".join(" ".join(str(Fraction(x)) for x in r)
                         for r in self.c) + "\n"

    @classmethod
    def parse(cls, text: str) -> "BivariateSeries":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                rows.append([_intify(Fraction(tok)) for tok in line.split()])
        return cls(rows, len(rows) - 1)


def expand_ratio(numer: BivariateSeries,
                 denom_factors: Sequence[BivariateSeries]) -> BivariateSeries:
    """Expand numer / prod(denom_factors) as a series; every denominator
    factor must have a constant unit z^0 coefficient."""
    out = numer
    for d in denom_factors:
        out = out * d.inverse()
    return out


def bracket_poly(coeffs_by_zpow: Sequence[Sequence[Coeff]],
                 order: int) -> BivariateSeries:
    """A bivariate polynomial, given the t-coefficient list of each
    z-power, as a series truncated at ``order``."""
    return BivariateSeries(coeffs_by_zpow, order)

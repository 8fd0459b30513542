"""Brute-force ground truth: enumerate all avoiders of a basis up to a
length bound and tabulate statistic distributions.

Avoiders are generated by extending each avoider of length n with every
possible new rightmost value and pruning; the classes are closed under
removal of the last entry, so the search tree is exactly the class.
Containment is only re-checked for occurrences that use the new entry.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import _kernels, perms
from .perms import (Basis, Perm, CLASS_A_BASIS, CLASS_B_BASIS,
                    contains_ending_at_last)

DEFAULT_NODE_BUDGET = 10 ** 8
BUDGET_ENV_VAR = "PERMCLASS_NODE_BUDGET"

STATISTICS: dict[str, Callable[[Perm], int]] = {
    "initial_decreasing_run": perms.initial_decreasing_run,
    "trailing_increasing_run": perms.trailing_increasing_run,
    "marked_trailing_run": perms.marked_trailing_run,
    "gap_count": perms.gap_count,
    "slice_count": perms.slice_count,
}


class BudgetExceededError(RuntimeError):
    """Raised when the enumeration would exceed the node budget."""


@dataclass
class CountReport:
    """Per-length counts, with optional per-statistic distributions.

    distributions maps a statistic name to a matrix m[n][k]: the number
    of length-n avoiders with statistic value k.
    """

    basis: Basis
    max_length: int
    counts: list[int]
    distributions: dict[str, list[list[int]]] = field(default_factory=dict)
    provenance: str = "oracle"

    def serialize_counts(self) -> str:
        """Golden-file format: one line per length, `n <tab> count`."""
        return "".join("%d\t%d\n" % (n, c) for n, c in enumerate(self.counts))

    def serialize_distribution(self, stat: str) -> str:
        """CSV rows n,k,count (zero rows omitted)."""
        rows = ["n,k,count"]
        for n, row in enumerate(self.distributions[stat]):
            for k, c in enumerate(row):
                if c:
                    rows.append("%d,%d,%d" % (n, k, c))
        return "\n".join(rows) + "\n"


def parse_counts(text: str) -> list[int]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            n, c = line.split("\t")
            assert int(n) == len(out)
            out.append(int(c))
    return out


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV_VAR)
    return int(value) if value else DEFAULT_NODE_BUDGET


def _fast_child_check(basis: Basis):
    """The O(n) per-candidate scan for the two bases of interest, or
    None when the generic incremental check must be used."""
    if basis == CLASS_A_BASIS:
        return _kernels.class_a_child_ok
    if basis == CLASS_B_BASIS:
        return _kernels.class_b_child_ok
    return None


def _generic_child_ok(basis: Basis, q: list, v: int) -> bool:
    p = Perm(q)
    return not any(contains_ending_at_last(p, sigma)
                   for sigma in basis.patterns)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self, amount: int) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError(
                "extension-attempt budget exhausted; raise it via the "
                "node_budget argument or %s" % BUDGET_ENV_VAR)


def _generate(basis: Basis, n_max: int, budget: _Budget,
              keep: Callable[[tuple], bool] | None = None,
              restrict_values: bool = False
              ) -> Iterator[tuple[int, list[tuple]]]:
    """Yield (n, avoiders-of-length-n as value tuples).  With
    restrict_values, only extensions with v >= 2 are tried (keeps the
    first entry equal to 1, i.e. single-slice permutations)."""
    fast = _fast_child_check(basis)
    frontier = [()]
    yield 0, frontier
    for n in range(1, n_max + 1):
        nxt = []
        lo = 2 if (restrict_values and n >= 2) else 1
        for p in frontier:
            budget.spend(n - lo + 1)
            for v in range(lo, n + 1):
                q = [x + 1 if x >= v else x for x in p]
                q.append(v)
                if fast is not None:
                    ok = fast(q, v)
                else:
                    ok = _generic_child_ok(basis, q, v)
                if ok:
                    nxt.append(tuple(q))
        frontier = nxt
        yield n, frontier


def enumerate_avoiders(b: Basis, n_max: int,
                       node_budget: int | None = None) -> CountReport:
    """Exact counts of avoiders of each length <= n_max.

    >>> enumerate_avoiders(CLASS_A_BASIS, 4).counts
    [1, 1, 2, 6, 22]
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    budget = _Budget(node_budget if node_budget is not None
                     else default_budget())
    counts = []
    for _n, frontier in _generate(b, n_max, budget):
        counts.append(len(frontier))
    return CountReport(basis=b, max_length=n_max, counts=counts)


def statistic_distribution(b: Basis, n_max: int, stat: str,
                           node_budget: int | None = None) -> CountReport:
    """Counts refined by a permutation statistic: matrix m[n][k] of
    length-n avoiders with statistic value k."""
    if stat not in STATISTICS:
        raise ValueError("unknown statistic %r (choose from %s)"
                         % (stat, ", ".join(sorted(STATISTICS))))
    fn = STATISTICS[stat]
    budget = _Budget(node_budget if node_budget is not None
                     else default_budget())
    counts = []
    matrix = []
    for n, frontier in _generate(b, n_max, budget):
        counts.append(len(frontier))
        row = [0] * (n + 2)
        for p in frontier:
            if n == 0 and stat == "gap_count":
                continue  # gap count is undefined on the empty permutation
            row[fn(Perm(p))] += 1
        matrix.append(row)
    return CountReport(basis=b, max_length=n_max, counts=counts,
                       distributions={stat: matrix})


def single_slice_distribution(b: Basis, n_max: int,
                              node_budget: int | None = None) -> CountReport:
    """Avoiders that start with their smallest entry, tabulated by the
    marked trailing run (the whole trailing run except the minimum)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    budget = _Budget(node_budget if node_budget is not None
                     else default_budget())
    counts = []
    matrix = []
    for n, frontier in _generate(b, n_max, budget, restrict_values=True):
        if n == 0:
            counts.append(0)
            matrix.append([0])
            continue
        counts.append(len(frontier))
        row = [0] * (n + 1)
        for p in frontier:
            row[perms.marked_trailing_run(Perm(p))] += 1
        matrix.append(row)
    return CountReport(basis=b, max_length=n_max, counts=counts,
                       distributions={"marked_trailing_run": matrix})


def filter_all_avoiders(b: Basis, n: int) -> list[Perm]:
    """Independent cross-check: filter all n! permutations with the
    generic containment test (no pruning, no incremental check)."""
    return [p for p in perms.all_perms(n) if perms.avoids_basis(p, b)]

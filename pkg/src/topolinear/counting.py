"""Counting reports: integer partitions driving the length sweep of the
splice construction, and quadratic-form counts for the pair-alphabet
construction, with machine-checked inequivalence exhibits at desk scale."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .budget import EQUIVALENCE_BUDGET, BudgetExceeded, SearchBudget
from .constructions import QuadraticSpec, quadratic_code
from .isometry import equivalent_codes


# ---------------------------------------------------------------------------
# integer partitions

def partition_exact(N: int) -> int:
    """p(N) by the pentagonal-number recurrence, exact integers throughout."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p[N]


def partitions_of(N: int):
    """All partitions of N as non-increasing tuples."""
    def rec(rest, most):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, most), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail

    yield from rec(N, N)


def partition_asymptotic(N: int) -> float:
    """The exponential main term exp(pi sqrt(2N/3)) / (4 N sqrt(3))."""
    if N < 1:
        raise ValueError("N must be positive")
    return math.exp(math.pi * math.sqrt(2 * N / 3)) / (4 * N * math.sqrt(3))


@dataclass(frozen=True)
class PartitionCount:
    N: int
    exact: int
    estimate: float

    @property
    def ratio(self) -> float:
        return self.exact / self.estimate


def ratio_report(Ns) -> list[PartitionCount]:
    """Exact versus estimate for each N, for eyeballing the trend toward 1."""
    return [PartitionCount(N, partition_exact(N), partition_asymptotic(N))
            for N in Ns]


# ---------------------------------------------------------------------------
# quadratic-form counting

def quadratic_form_count(q: int, n: int) -> int:
    """Upper-triangular quadratic parts on n variables over a q-element
    field: one free entry per unordered pair."""
    return q ** math.comb(n, 2)


def upper_triangular_forms(q: int, n: int):
    """All alpha tables: n x n, zero on and below the diagonal."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in itertools.product(range(q), repeat=len(pairs)):
        alpha = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            alpha[i][j] = v
        yield tuple(tuple(row) for row in alpha)


@dataclass
class FormEquivalenceReport:
    """Pairwise equivalence resolution for the codes of all upper-triangular
    forms at one parameter point. `classes` lists form indices grouped by
    code equivalence; `witnesses` maps an index pair to the isometry found.
    When the budget refuses the sweep, `verified` is False and only the raw
    count stands."""
    q: int
    s: int
    n: int
    form_count: int
    forms: list
    classes: list | None
    witnesses: dict
    verified: bool
    note: str = ""


def lower_bound_report(q: int, s: int, n: int,
                       budget: SearchBudget = EQUIVALENCE_BUDGET) -> FormEquivalenceReport:
    """Count the upper-triangular forms over GF(q^s) and, within budget,
    resolve the pairwise equivalence of their codes by exhaustive search."""
    size = q ** s
    forms = list(upper_triangular_forms(size, n))
    count = quadratic_form_count(size, n)
    assert len(forms) == count
    codes = []
    try:
        for alpha in forms:
            spec = QuadraticSpec.make(q, s, n, alpha=alpha)
            M = quadratic_code(spec)
            budget.check_points(M.q, M.n)
            codes.append(M)
    except BudgetExceeded as exc:
        return FormEquivalenceReport(q, s, n, count, forms, None, {}, False,
                                     f"unverified: {exc}")
    witnesses: dict = {}
    parent = list(range(count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    try:
        for i in range(count):
            for j in range(i + 1, count):
                if find(i) == find(j):
                    continue
                w = equivalent_codes(codes[i], codes[j], budget=budget)
                if w is not None:
                    witnesses[(i, j)] = w
                    parent[find(j)] = find(i)
    except BudgetExceeded as exc:
        return FormEquivalenceReport(q, s, n, count, forms, None, witnesses,
                                     False, f"unverified: {exc}")
    groups: dict[int, list[int]] = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    classes = sorted(groups.values())
    return FormEquivalenceReport(q, s, n, count, forms, classes, witnesses, True)

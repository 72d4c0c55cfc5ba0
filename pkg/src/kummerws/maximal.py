"""Explicit enumeration of absolute and relative maximal elements.

The sets split into m-1 residue branches plus one branch of m-multiples;
each branch is an affine hyperplane (fixed coordinate sum in j-space)
intersected with a box, enumerated analytically per coordinate so no
dead lattice point is ever visited.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import BetaTable, ceil_div, floor_div
from .membership import MaximalKind


@dataclass(frozen=True)
class Window:
    """Closed per-coordinate integer intervals [lo_k, hi_k]."""

    bounds: tuple  # of (lo, hi) pairs

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(tuple(b) for b in self.bounds))
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"empty interval [{lo}, {hi}]")

    @property
    def n(self) -> int:
        return len(self.bounds)

    def __contains__(self, point) -> bool:
        return all(lo <= a <= hi for a, (lo, hi) in zip(point, self.bounds))

    def points(self):
        """All lattice points, lexicographic."""

        def rec(prefix, k):
            if k == self.n:
                yield tuple(prefix)
                return
            lo, hi = self.bounds[k]
            for a in range(lo, hi + 1):
                yield from rec(prefix + [a], k + 1)

        yield from rec([], 0)

    def size(self) -> int:
        total = 1
        for lo, hi in self.bounds:
            total *= hi - lo + 1
        return total


@dataclass(frozen=True)
class MaximalElement:
    coords: tuple
    residue: int  # branch residue i, or None for the m-multiples branch
    js: tuple


def _sum_compositions(ranges, total):
    """All integer tuples (j_1..j_n) with j_k in ranges[k] and fixed sum,
    in lexicographic order; the last coordinate is forced."""
    n = len(ranges)
    suffix_min = [0] * (n + 1)
    suffix_max = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_min[k] = suffix_min[k + 1] + ranges[k][0]
        suffix_max[k] = suffix_max[k + 1] + ranges[k][1]

    def rec(prefix, k, remaining):
        if k == n - 1:
            lo, hi = ranges[k]
            if lo <= remaining <= hi:
                yield tuple(prefix + [remaining])
            return
        lo, hi = ranges[k]
        # j_k must leave a reachable remainder for the suffix
        lo = max(lo, remaining - suffix_max[k + 1])
        hi = min(hi, remaining - suffix_min[k + 1])
        for j in range(lo, hi + 1):
            yield from rec(prefix + [j], k + 1, remaining - j)

    if n:
        yield from rec([], 0, total)


def _branch_in_window(table, profile, window, i, target):
    """One residue branch (i = None for the m-multiples branch)."""
    m = profile.m
    n = profile.n
    offsets = [0] * n if i is None else [table.t[(k, i)] for k in range(1, n + 1)]
    ranges = []
    for k in range(n):
        lo, hi = window.bounds[k]
        ranges.append(
            (ceil_div(lo - offsets[k], m), floor_div(hi - offsets[k], m))
        )
    if any(lo > hi for lo, hi in ranges):
        return
    for js in _sum_compositions(ranges, target):
        coords = tuple(m * j + off for j, off in zip(js, offsets))
        yield MaximalElement(coords=coords, residue=i, js=js)


def branch_targets(kind: MaximalKind, profile, table: BetaTable = None):
    """Per-branch coordinate-sum targets in j-space: residue i maps to
    beta(i) + 1 - n + rho, the m-multiples branch to rho."""
    if table is None:
        table = BetaTable.build(profile)
    rho = kind.rho(profile.n)
    targets = {i: table.beta[i] + 1 - profile.n + rho for i in range(1, profile.m)}
    targets[None] = rho
    return targets, table


def enumerate_maximal_in_window(kind: MaximalKind, window: Window, profile):
    """All maximal elements of the chosen kind inside the window, as a
    deterministic stream: residue branches 1..m-1 then the m-multiples
    branch, lexicographic within each branch."""
    targets, table = branch_targets(kind, profile)
    for i in list(range(1, profile.m)) + [None]:
        yield from _branch_in_window(table, profile, window, i, targets[i])


def enumerate_minimal_generating(kind: MaximalKind, profile):
    """The finite set of maximal elements with all coordinates >= 1: for
    each residue branch, all nonnegative compositions of the branch target.

    The m-multiples branch never contributes (its all-positive solutions
    would need coordinate sum >= n > rho).
    """
    targets, table = branch_targets(kind, profile)
    out = []
    n = profile.n
    for i in range(1, profile.m):
        target = targets[i]
        if target < 0:
            continue
        ranges = [(0, target)] * n
        offsets = [table.t[(k, i)] for k in range(1, n + 1)]
        for js in _sum_compositions(ranges, target):
            coords = tuple(profile.m * j + off for j, off in zip(js, offsets))
            out.append(MaximalElement(coords=coords, residue=i, js=js))
    return out


def cardinality(kind: MaximalKind, profile) -> int:
    """|Upsilon(Q)| = sum over residues of C(beta(i) + rho, n - 1), with
    C(a, b) = 0 whenever a < b (including negative a)."""
    targets, table = branch_targets(kind, profile)
    rho = kind.rho(profile.n)
    total = 0
    for i in range(1, profile.m):
        a = table.beta[i] + rho
        if a >= profile.n - 1:
            total += comb(a, profile.n - 1)
    return total


def block_count(kind: MaximalKind, k: int, profile) -> int:
    """Number of residue branches whose target equals k, i.e. the size of
    the block [km, (k+1)m) x [0, m)^{n-1} of the finite maximal set."""
    if k < 0:
        raise ValueError(f"block index must be >= 0, got {k}")
    targets, _ = branch_targets(kind, profile)
    return sum(1 for i in range(1, profile.m) if targets[i] == k)


def block_counts(kind: MaximalKind, profile) -> dict:
    """All nonzero block counts, keyed by k."""
    targets, _ = branch_targets(kind, profile)
    out = {}
    for i in range(1, profile.m):
        t = targets[i]
        if t >= 0:
            out[t] = out.get(t, 0) + 1
    return dict(sorted(out.items()))

"""Membership, gap, and maximality criteria for lattice points.

All decisions reduce to exact floor/ceiling sums over the ramification
data; no Riemann-Roch space is ever materialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import ceil_div, floor_div, per_coordinate_t, unique_t
from .errors import IndexNotDistinguished
from .model import genus as profile_genus


class Verdict(enum.Enum):
    MEMBER = "Member"
    GAP = "Gap"
    PURE_GAP = "PureGap"
    NON_MEMBER_OUTSIDE_BOX = "NonMemberOutsideBox"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    drops: frozenset  # 1-based coordinates where the dimension drops


class MaximalKind(enum.Enum):
    ABSOLUTE = "absolute"
    RELATIVE = "relative"

    def rho(self, n: int) -> int:
        return 0 if self is MaximalKind.ABSOLUTE else n - 2


def _criterion_sum(alpha, t: int, profile) -> int:
    """sum floor((alpha_k + t*lambda_k)/m) over distinguished places
    plus sum floor(t*lambda_k/m) over the rest."""
    m = profile.m
    n = profile.n
    total = 0
    for k, lam in enumerate(profile.lambdas):
        if k < n:
            total += floor_div(alpha[k] + t * lam, m)
        else:
            total += floor_div(t * lam, m)
    return total


def ell_drop(i: int, alpha, profile) -> bool:
    """True iff the Riemann-Roch dimension at alpha does not change when
    the i-th distinguished place is subtracted; valid for any alpha in Z^n."""
    if not 1 <= i <= profile.n:
        raise IndexNotDistinguished(f"coordinate index {i} not in 1..{profile.n}")
    t_i = per_coordinate_t(i, alpha, profile)
    return _criterion_sum(alpha, t_i, profile) < 0


def classify(alpha, profile) -> Classification:
    """Full verdict for a lattice point.

    Member iff no coordinate drops.  Gap / pure gap verdicts apply only
    inside N_0^n, where those notions are defined; non-members with a
    negative coordinate are tagged NonMemberOutsideBox.
    """
    drops = frozenset(
        i for i in range(1, profile.n + 1) if ell_drop(i, alpha, profile)
    )
    if not drops:
        return Classification(Verdict.MEMBER, drops)
    if any(a < 0 for a in alpha):
        return Classification(Verdict.NON_MEMBER_OUTSIDE_BOX, drops)
    if len(drops) == profile.n:
        return Classification(Verdict.PURE_GAP, drops)
    return Classification(Verdict.GAP, drops)


def is_member(alpha, profile) -> bool:
    return classify(alpha, profile).verdict is Verdict.MEMBER


def _maximality_sum(alpha, t: int, profile) -> int:
    m = profile.m
    total = sum(ceil_div(alpha[k], m) for k in range(profile.n))
    total += sum(floor_div(t * lam, m) for lam in profile.lambdas)
    return total


def is_discrepancy_point(alpha, profile) -> bool:
    """True iff the divisor of alpha is a discrepancy for every pair of
    distinguished places: a common t exists and the ceiling/floor sum is 0."""
    t = unique_t(alpha, profile)
    return t is not None and _maximality_sum(alpha, t, profile) == 0


def is_relative_discrepancy_point(alpha, profile) -> bool:
    """Same test with target n - 2 (the relative maximality criterion)."""
    t = unique_t(alpha, profile)
    return t is not None and _maximality_sum(alpha, t, profile) == profile.n - 2


def is_maximal_by_criterion(alpha, kind: MaximalKind, profile) -> bool:
    """Single entry point for both maximality flavors."""
    t = unique_t(alpha, profile)
    if t is None:
        return False
    return _maximality_sum(alpha, t, profile) == kind.rho(profile.n)


def single_place_gap_count(profile, place: int = 1) -> int:
    """Number of gaps at one distinguished place, computed with the same
    drop criterion restricted to a single coordinate.

    By the classical gap theorem this must equal the genus; used as an
    independent cross-check of the ramification data.
    """
    restricted = _SinglePlaceView(profile, place)
    g = profile_genus(profile)
    return sum(
        1 for a in range(0, 2 * g + 2) if ell_drop(1, (a,), restricted)
    )


class _SinglePlaceView:
    """Reindexed profile exposing one distinguished place as coordinate 1."""

    def __init__(self, profile, place: int):
        if not 1 <= place <= profile.n:
            raise IndexNotDistinguished(
                f"place index {place} not in 1..{profile.n}"
            )
        self.m = profile.m
        lams = list(profile.lambdas)
        lams.insert(0, lams.pop(place - 1))
        self.lambdas = tuple(lams)
        self.n = 1

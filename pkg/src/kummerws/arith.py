"""Exact integer arithmetic underlying the semigroup criteria.

Everything here is a pure function of Python integers (arbitrary
precision), so no overflow is possible even for large exponents or
adversarial ramification data.

Conventions: place indices k and residue indices i are 1-based, matching
the usual mathematical indexing; lattice point coordinates are stored in
0-based tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import IndexNotDistinguished, ResidueOutOfRange


def floor_div(a: int, m: int) -> int:
    """Exact floor of a/m toward minus infinity (m >= 1)."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return a // m


def ceil_div(a: int, m: int) -> int:
    """Exact ceiling of a/m (m >= 1)."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return -((-a) // m)


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m; m need not be prime, but gcd(a, m) must be 1."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def _check_residue(i: int, m: int) -> None:
    if not 1 <= i <= m - 1:
        raise ResidueOutOfRange(f"residue index {i} not in 1..{m - 1}")


def t_of(k: int, i: int, profile) -> int:
    """The residue (i * lambda_k) mod m, guaranteed nonzero for
    distinguished places (gcd(lambda_k, m) = 1)."""
    if not 1 <= k <= profile.n:
        raise IndexNotDistinguished(f"place index {k} not in 1..{profile.n}")
    _check_residue(i, profile.m)
    return (i * profile.lambdas[k - 1]) % profile.m


def beta(i: int, profile) -> int:
    """The residue invariant sum(ceil(i*lambda_k / m) over all places) - 1."""
    m = profile.m
    _check_residue(i, m)
    return sum(ceil_div(i * lam, m) for lam in profile.lambdas) - 1


def per_coordinate_t(i: int, alpha, profile) -> int:
    """The unique t in {0, ..., m-1} with alpha_i + t*lambda_i == 0 mod m.

    Uniqueness holds because the distinguished lambdas are coprime to m.
    """
    if not 1 <= i <= profile.n:
        raise IndexNotDistinguished(f"coordinate index {i} not in 1..{profile.n}")
    m = profile.m
    inv = mod_inverse(profile.lambdas[i - 1], m)
    return (-alpha[i - 1] * inv) % m


def unique_t(alpha, profile):
    """The common t solving alpha_k + t*lambda_k == 0 mod m at every
    distinguished coordinate, or None when the per-coordinate solutions
    disagree."""
    t = per_coordinate_t(1, alpha, profile)
    for k in range(2, profile.n + 1):
        if per_coordinate_t(k, alpha, profile) != t:
            return None
    return t


@dataclass(frozen=True)
class BetaTable:
    """Precomputed beta(i) and t_k(i) for one profile, shared read-only
    by the enumeration kernels."""

    m: int
    beta: dict  # i -> beta(i)
    t: dict  # (k, i) -> t_k(i)

    @classmethod
    def build(cls, profile) -> "BetaTable":
        m = profile.m
        betas = {i: beta(i, profile) for i in range(1, m)}
        ts = {
            (k, i): t_of(k, i, profile)
            for k in range(1, profile.n + 1)
            for i in range(1, m)
        }
        return cls(m=m, beta=betas, t=ts)


def lambda_gcd(profile) -> int:
    """gcd of all lambdas, reduced against m; 1 means the defining
    function is not a proper power compatible with m."""
    g = 0
    for lam in profile.lambdas:
        g = gcd(g, lam)
    return gcd(g, profile.m)

"""Ramification profiles, validation, genus, and curve-family presets.

A profile (m; lambda_1, ..., lambda_r; n) is the full arithmetic model of
a Kummer extension y^m = f(x): the lambdas are the valuations of f at its
zeros and poles, and the first n entries mark the distinguished pairwise
totally ramified places.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .arith import ceil_div, floor_div, lambda_gcd
from .errors import BadPreset, InconsistentProfile

MAX_PLACES = 10**6


@dataclass(frozen=True)
class RamificationProfile:
    m: int
    lambdas: tuple
    n: int
    labels: tuple = None
    field_info: tuple = None  # (p, q) when known

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def r(self) -> int:
        return len(self.lambdas)


@dataclass(frozen=True)
class Violation:
    severity: str  # "error" | "warning"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def errors(self):
        return [v for v in self.violations if v.severity == "error"]

    @property
    def warnings(self):
        return [v for v in self.violations if v.severity == "warning"]


def validate(profile: RamificationProfile) -> ValidationReport:
    """Check every structural hypothesis on the ramification data.

    Violations are returned as data, tagged error or warning; the profile
    is usable downstream iff there are no errors.
    """
    out = []

    def err(msg):
        out.append(Violation("error", msg))

    def warn(msg):
        out.append(Violation("warning", msg))

    if profile.m < 2:
        err(f"m must be >= 2, got {profile.m}")
    if profile.r < 2:
        err(f"need at least 2 ramified places, got {profile.r}")
    for k, lam in enumerate(profile.lambdas, start=1):
        if lam == 0:
            err(f"lambda_{k} must be nonzero")
    total = sum(profile.lambdas)
    if total != 0:
        err(f"sum of lambdas must be 0, got {total}")
    if not 2 <= profile.n <= profile.r:
        err(f"n must satisfy 2 <= n <= r={profile.r}, got {profile.n}")
    if profile.m >= 2:
        for k in range(1, min(profile.n, profile.r) + 1):
            g = gcd(profile.lambdas[k - 1], profile.m)
            if g != 1:
                err(
                    f"gcd(lambda_{k}, m) = {g} != 1: place {k} is not "
                    "totally ramified"
                )
        if profile.lambdas and lambda_gcd(profile) != 1:
            err(
                "all lambdas share a common divisor d > 1 dividing m: "
                "the defining function is a d-th power"
            )
    if profile.labels is not None and len(profile.labels) != profile.r:
        err(f"labels length {len(profile.labels)} != r = {profile.r}")
    if profile.field_info is not None:
        p, q = profile.field_info
        if profile.m % p == 0:
            err(f"characteristic p={p} divides m={profile.m}")
        if q < profile.n:
            warn(
                f"q={q} < n={profile.n}: the semigroup interpretation "
                "needs q >= n; arithmetic results are still computed"
            )
    return ValidationReport(tuple(out))


def genus(profile: RamificationProfile) -> int:
    """Genus from the tame ramification data:
    2g - 2 = -2m + sum(m - gcd(lambda_k, m))."""
    rh = -2 * profile.m + sum(
        profile.m - gcd(lam, profile.m) for lam in profile.lambdas
    )
    if rh % 2 != 0:
        raise InconsistentProfile(f"2g - 2 = {rh} is odd")
    g = rh // 2 + 1
    if g < 0:
        raise InconsistentProfile(f"negative genus {g}")
    return g


# ---------------------------------------------------------------------------
# Curve-family presets


@dataclass(frozen=True)
class CurvePreset:
    kind: str
    params: dict = field(compare=False)
    profile: RamificationProfile = None

    def __post_init__(self):
        report = validate(self.profile)
        if not report.ok:
            msgs = "; ".join(v.message for v in report.errors)
            raise BadPreset(f"{self.kind} preset produced invalid profile: {msgs}")


def _check_r(r: int) -> None:
    if r + 1 > MAX_PLACES:
        raise BadPreset(f"preset would materialize {r + 1} places (cap {MAX_PLACES})")


def preset_separable(m: int, t: int, n: int) -> CurvePreset:
    """y^m = f(x) with f separable of degree t: t simple zeros and one
    pole of order t. No coprimality between m and t is required."""
    if m < 2:
        raise BadPreset(f"m must be >= 2, got {m}")
    if t < 2:
        raise BadPreset(f"t must be >= 2, got {t}")
    if not 2 <= n <= t:
        raise BadPreset(f"n must satisfy 2 <= n <= t={t}, got {n}")
    _check_r(t)
    profile = RamificationProfile(m=m, lambdas=(1,) * t + (-t,), n=n)
    return CurvePreset("separable", {"m": m, "t": t, "n": n}, profile)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _smallest_prime_factor(q: int) -> int:
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = _smallest_prime_factor(q)
    while q % p == 0:
        q //= p
    return q == 1


def _kummer_family(q: int, d: int, n_exp: int, s: int, n: int, p: int):
    """Shared construction for the X_{a,b,n,s} / Y_{n,s} families:
    q/d simple zeros, q(q-1)/d zeros of order q+1, one pole of order q^3/d."""
    if n_exp < 3 or n_exp % 2 == 0:
        raise BadPreset(f"n_exp must be odd and >= 3, got {n_exp}")
    top = q**n_exp + 1
    if top % (q + 1) != 0 or (top // (q + 1)) % s != 0:
        raise BadPreset(f"s={s} must divide (q^{n_exp}+1)/(q+1)")
    m = top // s
    n_simple = q // d
    n_heavy = q * (q - 1) // d
    _check_r(n_simple + n_heavy)
    lambdas = (1,) * n_simple + (q + 1,) * n_heavy + (-(q**3) // d,)
    return RamificationProfile(
        m=m, lambdas=lambdas, n=n, field_info=(p, q ** (2 * n_exp))
    )


def preset_xabns(p: int, a: int, b: int, n_exp: int, s: int, n: int) -> CurvePreset:
    """The maximal curves X_{a,b,n,s} over F_{q^{2n}} with q = p^a, d = p^b."""
    if not _is_prime(p):
        raise BadPreset(f"p={p} is not prime")
    if not (1 <= b < a and a % b == 0):
        raise BadPreset(f"need b | a and b < a, got a={a}, b={b}")
    q = p**a
    d = p**b
    if not 2 <= n <= q // d:
        raise BadPreset(f"n must satisfy 2 <= n <= q/d={q // d}, got {n}")
    profile = _kummer_family(q, d, n_exp, s, n, p)
    return CurvePreset(
        "xabns", {"p": p, "a": a, "b": b, "n_exp": n_exp, "s": s, "n": n}, profile
    )


def preset_yns(q: int, n_exp: int, s: int, n: int) -> CurvePreset:
    """The maximal curves Y_{n,s} over F_{q^{2n}} (the d = 1 family)."""
    if not _is_prime_power(q):
        raise BadPreset(f"q={q} is not a prime power")
    if not 2 <= n <= q:
        raise BadPreset(f"n must satisfy 2 <= n <= q={q}, got {n}")
    p = _smallest_prime_factor(q)
    profile = _kummer_family(q, 1, n_exp, s, n, p)
    return CurvePreset("yns", {"q": q, "n_exp": n_exp, "s": s, "n": n}, profile)


def preset_beelen_montanucci(q: int, n_exp: int, n: int) -> CurvePreset:
    """The Beelen-Montanucci curves: q+1 simple zeros, q^2-q-1 zeros of
    order q+1, one pole of order q^3 - q; exponent m = q^n + 1."""
    if not _is_prime_power(q):
        raise BadPreset(f"q={q} is not a prime power")
    if n_exp < 3 or n_exp % 2 == 0:
        raise BadPreset(f"n_exp must be odd and >= 3, got {n_exp}")
    if not 2 <= n <= q + 1:
        raise BadPreset(f"n must satisfy 2 <= n <= q+1={q + 1}, got {n}")
    p = _smallest_prime_factor(q)
    n_heavy = q * q - q - 1
    _check_r(q + 1 + n_heavy)
    profile = RamificationProfile(
        m=q**n_exp + 1,
        lambdas=(1,) * (q + 1) + (q + 1,) * n_heavy + (-(q**3 - q),),
        n=n,
        field_info=(p, q ** (2 * n_exp)),
    )
    return CurvePreset(
        "beelen-montanucci", {"q": q, "n_exp": n_exp, "n": n}, profile
    )


# Family-specific closed forms for beta(i); each must agree with the
# generic sum over the preset's lambdas (tested, never assumed).


def separable_beta_closed_form(i: int, m: int, t: int) -> int:
    return t - 1 - floor_div(t * i, m)


def xy_family_beta_closed_form(i: int, q: int, d: int, m: int) -> int:
    return (
        q // d
        + (q * (q - 1) // d) * ceil_div(i * (q + 1), m)
        - floor_div(i * (q**3 // d), m)
        - 1
    )


def bm_beta_closed_form(i: int, q: int, m: int) -> int:
    return (
        q + 1
        + (q * q - q - 1) * ceil_div(i * (q + 1), m)
        - floor_div(i * (q**3 - q), m)
        - 1
    )


# ---------------------------------------------------------------------------
# JSON profile format


def profile_to_dict(profile: RamificationProfile) -> dict:
    out = {"m": profile.m, "lambdas": list(profile.lambdas), "n": profile.n}
    if profile.labels is not None:
        out["labels"] = list(profile.labels)
    if profile.field_info is not None:
        out["field"] = {"p": profile.field_info[0], "q": profile.field_info[1]}
    return out


def profile_from_dict(data: dict) -> RamificationProfile:
    try:
        m = int(data["m"])
        lambdas = tuple(int(x) for x in data["lambdas"])
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed profile: {exc}") from None
    labels = tuple(data["labels"]) if "labels" in data else None
    field_info = None
    if "field" in data:
        field_info = (int(data["field"]["p"]), int(data["field"]["q"]))
    return RamificationProfile(
        m=m, lambdas=lambdas, n=n, labels=labels, field_info=field_info
    )


def load_profile(fp) -> RamificationProfile:
    return profile_from_dict(json.load(fp))


def dump_profile(profile: RamificationProfile, fp) -> None:
    json.dump(profile_to_dict(profile), fp, indent=2)
    fp.write("\n")

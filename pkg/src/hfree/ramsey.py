"""Ramsey upper bounds and the degree cap for {K_{1,s}, K_t}-free graphs.

A vertex of degree at least R(s, t-1) has, among its neighbours, either
s pairwise non-adjacent vertices (an induced K_{1,s}) or t-1 pairwise
adjacent ones (a K_t). So a graph avoiding both has maximum degree at most
R(s, t-1) - 1.

Any upper bound d' >= R(s, t-1) - 1 can stand in for the exact cap in the
K_t-free reduction: the degree argument still holds for d', and a larger
d' only widens the keep-radius and the size bound. That is why the
binomial fallback is sound when no exact value is tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

# Exact values of R(s, t) for 3 <= s <= t, as known by 2014.
_EXACT = {
    (3, 3): 6,  # Greenwood & Gleason 1955
    (3, 4): 9,  # Greenwood & Gleason 1955
    (3, 5): 14,  # Greenwood & Gleason 1955
    (3, 6): 18,  # Kery 1964
    (3, 7): 23,  # Kalbfleisch 1966; Graver & Yackel 1968
    (3, 8): 28,  # McKay & Zhang 1992
    (3, 9): 36,  # Grinstead & Roberts 1982
    (4, 4): 18,  # Greenwood & Gleason 1955
    (4, 5): 25,  # McKay & Radziszowski 1995
}


@dataclass(frozen=True)
class RamseyBound:
    s: int
    t: int
    value: int
    exact: bool


def ramsey_upper(s: int, t: int) -> RamseyBound:
    """Upper bound on R(s, t): a tabulated exact value or C(s+t-2, s-1)."""
    if s < 1 or t < 1:
        raise ValueError(f"Ramsey arguments must be positive, got ({s}, {t})")
    lo, hi = min(s, t), max(s, t)
    if lo == 1:
        return RamseyBound(s, t, 1, True)
    if lo == 2:
        return RamseyBound(s, t, hi, True)
    if (lo, hi) in _EXACT:
        return RamseyBound(s, t, _EXACT[lo, hi], True)
    return RamseyBound(s, t, comb(s + t - 2, s - 1), False)


def degree_cap(s: int, t: int) -> int:
    """Maximum degree of any {K_{1,s}, K_t}-free graph is at most this."""
    if s < 2 or t < 2:
        raise ValueError(f"degree cap needs s >= 2 and t >= 2, got ({s}, {t})")
    return ramsey_upper(s, t - 1).value - 1

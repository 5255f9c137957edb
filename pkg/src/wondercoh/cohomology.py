"""Evaluation of the cohomology decomposition for minimal rank wonderful varieties.

For a weight lam in pic(X) the degree-d cohomology of the line bundle
L_lam splits into irreducibles L(mu^+), one summand for every pair (J, mu)
with J a subset of the spherical roots, mu in the translated sign cone
(strictly positive multiples of J, nonpositive off J), mu + rho regular,
the negative-pairing set of mu + rho equal to J, and l(mu) + |J| = d.

Enumeration is exact: candidate weights mu = lam + sum c_i gamma_i are the
integer points of the ball |mu + rho|^2 <= |lam + rho|^2, which contains
every contributing mu because each c_i (mu + rho, gamma_i) <= 0 by the two
sign conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import mat_vec
from .roots import Weight
from .varieties import WonderfulVariety


@dataclass(frozen=True)
class Contribution:
    """One summand L(mu_plus) of H^degree, with its certifying pair (J, mu)."""

    J: tuple[int, ...]
    mu: Weight
    length: int
    mu_plus: Weight
    degree: int

    def j_bitmask(self) -> int:
        return sum(1 << i for i in self.J)


@dataclass(frozen=True)
class Constituent:
    highest_weight: Weight
    multiplicity: int
    dimension: int
    witnesses: tuple[Contribution, ...]


@dataclass(frozen=True)
class DegreeGroup:
    degree: int
    constituents: tuple[Constituent, ...]
    dimension: int


@dataclass(frozen=True)
class CohomologyTable:
    lam: Weight
    groups: tuple[DegreeGroup, ...]

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.groups)

    def dimension(self, degree: int) -> int:
        for g in self.groups:
            if g.degree == degree:
                return g.dimension
        return 0

    def constituents(self, degree: int) -> tuple[Constituent, ...]:
        for g in self.groups:
            if g.degree == degree:
                return g.constituents
        return ()

    def dimensions_by_degree(self) -> dict[int, int]:
        return {g.degree: g.dimension for g in self.groups}


def _require_pic(X: WonderfulVariety, lam: Sequence[int]) -> Weight:
    lam = X.group.check_weight(lam)
    if X.pic_contains(lam) is None:
        raise ValueError(f"{list(lam)} is not in pic({X.name})")
    return lam


def omega_signature(X: WonderfulVariety, mu: Sequence[int]) -> tuple[int, ...]:
    """Indices i with (mu + rho, gamma_i) < 0; zero pairings stay out."""
    mu = _require_pic(X, mu)
    shifted = [x + 1 for x in mu]
    out = []
    for i, row in enumerate(X._gamma_sign_rows):
        if sum(r * x for r, x in zip(row, shifted)) < 0:
            out.append(i)
    return tuple(out)


def in_translated_R(
    X: WonderfulVariety, lam: Sequence[int], mu: Sequence[int], J: Sequence[int]
) -> bool:
    """Whether mu - lam expands over the spherical roots with coefficients
    >= 1 on J and <= 0 elsewhere (returns False outside the integer span)."""
    lam = _require_pic(X, lam)
    mu = _require_pic(X, mu)
    jset = set(J)
    diff = tuple(a - b for a, b in zip(mu, lam))
    coords = X.sigma_coords(diff)
    if coords is None or any(c.denominator != 1 for c in coords):
        return False
    return _sign_pattern_ok(tuple(int(c) for c in coords), jset)


def _sign_pattern_ok(coeffs: tuple[int, ...], jset: set[int]) -> bool:
    return all(
        (c >= 1) if i in jset else (c <= 0) for i, c in enumerate(coeffs)
    )


def _ball_coefficients(X: WonderfulVariety, lam: Weight) -> list[tuple[int, ...]]:
    """All integer c with |lam + rho + sum c_i gamma_i|^2 <= |lam + rho|^2.

    Branch and bound over the LDL^T factorisation of the spherical Gram
    matrix; every bound is a Fraction comparison, so boundary points are
    never lost.  c = 0 always qualifies (with equality), hence the result
    is nonempty.
    """
    r = X.rank
    if r == 0:
        return [()]
    g = X.group
    shifted = [x + 1 for x in lam]
    b = [g.inner_product(shifted, gam) for gam in X.spherical_roots]
    L, d = X._sigma_ldl
    # complete the square: f(c) = (c+z)^T G (c+z) - z^T G z with z = G^-1 b,
    # and peel coordinates off the LDL^T factorisation from the last one down.
    z = mat_vec(X.sigma_gram_inv, b)
    budget = sum(zi * bi for zi, bi in zip(z, b))  # z^T G z
    results: list[tuple[int, ...]] = []
    w = [Fraction(0)] * r  # w_i = c_i + z_i along the current branch

    def descend(i: int, remaining: Fraction) -> None:
        if i < 0:
            results.append(tuple(int(w_k - z_k) for w_k, z_k in zip(w, z)))
            return
        offset = z[i] + sum(L[j][i] * w[j] for j in range(i + 1, r))
        up = math.ceil(-offset)
        # d_i * (c_i + offset)^2 is convex with vertex at -offset: the term
        # is monotone along c_i = up, up+1, ... and along up-1, up-2, ...,
        # so each side may stop at the first budget overrun
        for step, first in ((1, up), (-1, up - 1)):
            c_i = first
            while True:
                term = d[i] * (Fraction(c_i) + offset) ** 2
                if term > remaining:
                    break
                w[i] = Fraction(c_i) + z[i]
                descend(i - 1, remaining - term)
                c_i += step
        w[i] = Fraction(0)

    descend(r - 1, budget)
    return sorted(results)


def enumerate_candidates(X: WonderfulVariety, lam: Sequence[int]) -> list[Weight]:
    """Finite superset of all contributing weights for lam (see module docstring)."""
    lam = _require_pic(X, lam)
    out = []
    for c in _ball_coefficients(X, lam):
        mu = list(lam)
        for ci, gam in zip(c, X.spherical_roots):
            for k, x in enumerate(gam):
                mu[k] += ci * x
        out.append(tuple(mu))
    return out


def contributions(X: WonderfulVariety, lam: Sequence[int]) -> list[Contribution]:
    """All certified pairs (J, mu) for lam, in canonical order."""
    lam = _require_pic(X, lam)
    g = X.group
    base_pair = g.shifted_pairings(lam)
    shifted = [x + 1 for x in lam]
    sig_base = [
        sum(r * x for r, x in zip(row, shifted)) for row in X._gamma_sign_rows
    ]
    out = []
    for c in _ball_coefficients(X, lam):
        # J from the omega signature of mu
        jset = set()
        for i in range(X.rank):
            s = sig_base[i] + sum(
                cj * X._gamma_sign_gram[i][j] for j, cj in enumerate(c)
            )
            if s < 0:
                jset.add(i)
        if not _sign_pattern_ok(c, jset):
            continue
        pair = list(base_pair)
        for j, cj in enumerate(c):
            if cj:
                row = X._gamma_coroot_rows[j]
                for k in range(len(pair)):
                    pair[k] += cj * row[k]
        if any(p == 0 for p in pair):
            continue  # mu + rho singular
        mu = list(lam)
        for j, cj in enumerate(c):
            gam = X.spherical_roots[j]
            for k, x in enumerate(gam):
                mu[k] += cj * x
        mu = tuple(mu)
        made = g.make_dominant_shifted(mu)
        assert made is not None
        mu_plus, length, _ = made
        if length != sum(1 for p in pair if p < 0):
            raise AssertionError("length mismatch between pairing rows and walk")
        degree = length + len(jset)
        if not 0 <= degree <= X.dimension_N:
            raise AssertionError("degree outside [0, N]")
        out.append(Contribution(tuple(sorted(jset)), mu, length, mu_plus, degree))
    out.sort(key=lambda t: (t.degree, t.mu))
    return out


def cohomology_table(X: WonderfulVariety, lam: Sequence[int]) -> CohomologyTable:
    """Aggregate contributions into per-degree constituents with dimensions."""
    lam = _require_pic(X, lam)
    conts = contributions(X, lam)
    by_key: dict[tuple[int, Weight], list[Contribution]] = {}
    for t in conts:
        by_key.setdefault((t.degree, t.mu_plus), []).append(t)
    degrees = sorted({deg for deg, _ in by_key})
    groups = []
    for deg in degrees:
        constituents = []
        total = 0
        for (d, hw), wits in sorted(by_key.items()):
            if d != deg:
                continue
            wits = tuple(sorted(wits, key=lambda t: (t.j_bitmask(), t.mu)))
            dim = X.group.weyl_dimension(hw)
            constituents.append(Constituent(hw, len(wits), dim, wits))
            total += len(wits) * dim
        groups.append(DegreeGroup(deg, tuple(constituents), total))
    return CohomologyTable(tuple(lam), tuple(groups))


def serre_dual_weight(X: WonderfulVariety, lam: Sequence[int]) -> Weight:
    """Weight of the Serre-dual line bundle; an involution on pic(X)."""
    lam = _require_pic(X, lam)
    twist = X.serre_twist()
    dual = tuple(t - x for x, t in zip(lam, twist))
    if X.pic_contains(dual) is None:
        raise ValueError(f"{X.name}: Serre dual of {list(lam)} left pic; bad catalog data")
    return dual


def serre_partner(X: WonderfulVariety, t: Contribution) -> tuple[tuple[int, ...], Weight]:
    """The witness (J*, mu*) paired with (J, mu) under the duality involution."""
    jstar = tuple(i for i in range(X.rank) if i not in t.J)
    mustar = tuple(-x - y for x, y in zip(t.mu, X.two_rho_X))
    return jstar, mustar

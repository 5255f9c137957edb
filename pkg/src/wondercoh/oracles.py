"""Independent ground truth used to falsify the main evaluation.

None of these functions reuse the engine's candidate enumeration: the
flag variety rule is a single chamber walk, the projective space
dimensions are binomial closed forms, the degree-zero description scans a
plain coordinate box, and the Weyl group oracle lists group elements
outright.  Agreement between these and the engine is evidence, not a
tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .cohomology import (
    CohomologyTable,
    Constituent,
    Contribution,
    DegreeGroup,
    cohomology_table,
    contributions,
    enumerate_candidates,
    serre_dual_weight,
    serre_partner,
)
from .exactalg import frac_isqrt_floor
from .roots import RootSystem, Weight
from .varieties import WonderfulVariety


class OracleBudgetError(RuntimeError):
    """A bounded scan exceeded its candidate budget (likely bad catalog data)."""


def bwb_direct(X: WonderfulVariety, lam: Sequence[int]) -> CohomologyTable:
    """Flag variety cohomology: one chamber walk, no spherical machinery."""
    if X.rank != 0:
        raise ValueError("bwb_direct only applies to flag varieties")
    lam = X.group.check_weight(lam)
    made = X.group.make_dominant_shifted(lam)
    if made is None:
        return CohomologyTable(lam, ())
    lam_plus, length, _ = made
    witness = Contribution((), lam, length, lam_plus, length)
    dim = X.group.weyl_dimension(lam_plus)
    group = DegreeGroup(length, (Constituent(lam_plus, 1, dim, (witness,)),), dim)
    return CohomologyTable(lam, (group,))


def projective_space_cohomology(m: int, k: int) -> dict[int, int]:
    """Nonzero H^d(P^m, O(k)) dimensions by degree (classical closed form)."""
    if m < 1:
        raise ValueError("need m >= 1")
    if k >= 0:
        return {0: comb(m + k, m)}
    if k <= -m - 1:
        return {m: comb(-k - 1, m)}
    return {}


def quadric_cohomology(m: int, k: int) -> dict[int, int]:
    """Nonzero H^d(Q_m, O(k)) for a smooth m-dimensional quadric (m >= 2).

    Sections come from the ambient restriction sequence, so
    h^0(O(k)) = C(m+1+k, m+1) - C(m-1+k, m+1); the top degree is Serre
    dual to sections of O(-m-k) (the canonical sheaf is O(-m)); all
    intermediate degrees vanish.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if k >= 0:
        return {0: comb(m + 1 + k, m + 1) - comb(m - 1 + k, m + 1)}
    if k <= -m:
        return {m: quadric_cohomology(m, -m - k)[0]}
    return {}


def brion_h0(X: WonderfulVariety, lam: Sequence[int]) -> list[Weight]:
    """Dominant weights mu with lam - mu a nonnegative integer combination
    of the spherical roots, found by a plain box scan.

    Dominant mu forces |mu| <= |lam| (each spherical root is a nonnegative
    combination of positive roots), so with mu = lam - sum d_i gamma_i the
    vector d satisfies d^T G d <= 4 |lam|^2 and each coordinate is at most
    2 |lam| sqrt((G^-1)_ii).
    """
    g = X.group
    lam = g.check_weight(lam)
    if X.pic_contains(lam) is None:
        raise ValueError(f"{list(lam)} is not in pic({X.name})")
    r = X.rank
    if r == 0:
        return [tuple(lam)] if g.is_dominant(lam) else []
    lam_norm = g.inner_product(lam, lam)
    bounds = [
        frac_isqrt_floor(4 * lam_norm * X.sigma_gram_inv[i][i]) for i in range(r)
    ]
    found = []
    for d in itertools.product(*(range(b + 1) for b in bounds)):
        mu = list(lam)
        for di, gam in zip(d, X.spherical_roots):
            for k, x in enumerate(gam):
                mu[k] -= di * x
        if all(x >= 0 for x in mu):
            found.append(tuple(mu))
    return sorted(found)


def vanishing_profile(
    X: WonderfulVariety, box: int, candidate_cap: int = 200_000
) -> set[int]:
    """Union of nonzero cohomology degrees over all pic weights with
    coordinates in [-box, box]."""
    degrees: set[int] = set()
    axes = [range(-box, box + 1)] * len(X.pic_basis)
    for coords in itertools.product(*axes):
        lam = X.weight_from_pic_coords(coords)
        n_candidates = len(enumerate_candidates(X, lam))
        if n_candidates > candidate_cap:
            raise OracleBudgetError(
                f"{X.name}, lambda={list(coords)}: {n_candidates} candidates "
                f"exceed the cap {candidate_cap}"
            )
        degrees.update(cohomology_table(X, lam).nonzero_degrees())
    return degrees


@dataclass(frozen=True)
class SerreCheck:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def serre_involution_check(X: WonderfulVariety, lam: Sequence[int]) -> SerreCheck:
    """Verify the witness bijection (J, mu) -> (J*, mu*) between lam and its
    Serre dual, including degree complementarity and dimension equality."""
    lam = X.group.check_weight(lam)
    dual = serre_dual_weight(X, lam)
    left = contributions(X, lam)
    right = contributions(X, dual)
    n = X.dimension_N
    index = {(t.J, t.mu): t for t in right}
    if len(index) != len(right):
        return SerreCheck(False, "duplicate witnesses on the dual side")
    if len(left) != len(right):
        return SerreCheck(False, f"{len(left)} witnesses vs {len(right)} dual ones")
    for t in left:
        jstar, mustar = serre_partner(X, t)
        partner = index.get((jstar, mustar))
        if partner is None:
            return SerreCheck(
                False, f"witness (J={t.J}, mu={list(t.mu)}) has no dual partner"
            )
        if partner.degree != n - t.degree:
            return SerreCheck(
                False,
                f"degree {t.degree} pairs with {partner.degree}, expected {n - t.degree}",
            )
    dims = cohomology_table(X, lam).dimensions_by_degree()
    dual_dims = cohomology_table(X, dual).dimensions_by_degree()
    for d, value in dims.items():
        if dual_dims.get(n - d, 0) != value:
            return SerreCheck(False, f"dim H^{d} = {value} but dual H^{n - d} differs")
    return SerreCheck(True)


# ---------------------------------------------------------------------------
# Weyl group by brute force (small ranks only)


class BruteWeylGroup:
    """Explicit element list of a Weyl group of total rank <= 3."""

    def __init__(self, system: RootSystem):
        if system.rank > 3:
            raise ValueError("brute force Weyl groups are limited to rank <= 3")
        self.system = system
        n = system.rank
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        gens = [self._simple_matrix(i) for i in range(n)]
        lengths = {identity: 0}
        frontier = [identity]
        while frontier:
            new = []
            for m in frontier:
                for gmat in gens:
                    prod = self._mul(gmat, m)
                    if prod not in lengths:
                        lengths[prod] = lengths[m] + 1
                        new.append(prod)
            frontier = new
        self.lengths = lengths
        self.elements = sorted(lengths, key=lambda m: (lengths[m], m))

    def _simple_matrix(self, i: int):
        n = self.system.rank
        a = self.system.cartan
        return tuple(
            tuple(int(j == k) - (a[j][i] if k == i else 0) for k in range(n))
            for j in range(n)
        )

    @staticmethod
    def _mul(m1, m2):
        n = len(m1)
        return tuple(
            tuple(sum(m1[i][k] * m2[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    @staticmethod
    def apply(m, v: Sequence[int]) -> Weight:
        return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)

    def __len__(self) -> int:
        return len(self.elements)

    def make_dominant_shifted(
        self, lam: Sequence[int]
    ) -> Optional[tuple[Weight, int]]:
        """Minimise over the whole group: the oracle for the chamber walk."""
        v = tuple(x + 1 for x in self.system.check_weight(lam))
        best = None
        for m in self.elements:
            image = self.apply(m, v)
            if all(x > 0 for x in image):
                cand = (tuple(x - 1 for x in image), self.lengths[m])
                if best is None or cand[1] < best[1]:
                    best = cand
        return best  # None exactly when lam + rho is singular


def weyl_group_bruteforce(system: RootSystem) -> BruteWeylGroup:
    return BruteWeylGroup(system)


def naive_contribution_scan(
    X: WonderfulVariety, lam: Sequence[int], box: int
) -> list[Contribution]:
    """Contributions found by scanning the axis-aligned coefficient box
    [-box, box]^r with the defining conditions spelled out directly
    (rational inner products, no candidate ball)."""
    g = X.group
    lam = g.check_weight(lam)
    r = X.rank
    out = []
    for c in itertools.product(range(-box, box + 1), repeat=r):
        mu = list(lam)
        for ci, gam in zip(c, X.spherical_roots):
            for k, x in enumerate(gam):
                mu[k] += ci * x
        mu = tuple(mu)
        if not g.is_regular_shifted(mu):
            continue
        shifted = [x + 1 for x in mu]
        jset = {
            i
            for i, gam in enumerate(X.spherical_roots)
            if g.inner_product(shifted, gam) < 0
        }
        if not all((ci >= 1) if i in jset else (ci <= 0) for i, ci in enumerate(c)):
            continue
        made = g.make_dominant_shifted(mu)
        mu_plus, length, _ = made
        out.append(
            Contribution(tuple(sorted(jset)), mu, length, mu_plus, length + len(jset))
        )
    out.sort(key=lambda t: (t.degree, t.mu))
    return out

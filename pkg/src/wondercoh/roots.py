"""Exact root system arithmetic and Weyl group operations.

Weights are plain tuples of integers in the fundamental-weight basis of a
fixed :class:`RootSystem`.  All operations are pure and use exact integer
or rational arithmetic: chamber membership is a sign decision and must
never go through floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Optional, Sequence

from .exactalg import Matrix, dot, frac_matrix, mat_inverse, mat_vec

Weight = tuple[int, ...]

#: classical positive root counts per simple family
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120}.get,
    "F": {4: 24}.get,
    "G": {2: 6}.get,
}

_WEYL_ORDER = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": {6: 51840, 7: 2903040, 8: 696729600}.get,
    "F": {4: 1152}.get,
    "G": {2: 12}.get,
}


def _simple_edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, a_ij, a_ji) of the Dynkin diagram, 0-based."""
    chain = [(i, i + 1, -1, -1) for i in range(rank - 1)]
    if family == "A":
        return chain
    if family == "B":
        # last node short: <alpha_{n-1}, alpha_n^vee> = -2
        return chain[:-1] + [(rank - 2, rank - 1, -1, -2)]
    if family == "C":
        return chain[:-1] + [(rank - 2, rank - 1, -2, -1)]
    if family == "D":
        if rank == 2:
            return []
        return [(i, i + 1, -1, -1) for i in range(rank - 2)] + [(rank - 3, rank - 1, -1, -1)]
    if family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, rank - 1)]
        return [(i, j, -1, -1) for i, j in edges]
    if family == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if family == "G":
        # alpha_1 short, alpha_2 long (Bourbaki)
        return [(0, 1, -3, -1)]
    raise ValueError(f"unknown family {family!r}")


def _validate_type(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 2,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family)
    if not ok:
        raise ValueError(f"invalid Dynkin type {family}{rank}")


def _component_cartan(family: str, rank: int) -> list[list[int]]:
    a = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]
    for i, j, aij, aji in _simple_edges(family, rank):
        a[i][j] = aij
        a[j][i] = aji
    return a


def _component_symmetrizer(family: str, rank: int) -> list[int]:
    """Positive integers d_i with d_i * A_ij symmetric, min d_i = 1."""
    if family == "B":
        return [2] * (rank - 1) + [1]
    if family == "C":
        return [1] * (rank - 1) + [2]
    if family == "F":
        return [2, 2, 1, 1]
    if family == "G":
        return [1, 3]
    return [1] * rank


class RootSystem:
    """Cartan data of a product of simple root systems.

    Built once from a list of (family, rank) pairs; immutable afterwards.
    Positive roots are generated by reflection closure and frozen in a
    deterministic order (height, then lexicographic), so scans over them
    are reproducible.
    """

    def __init__(self, components: Sequence[tuple[str, int]]):
        components = tuple((str(f).upper(), int(n)) for f, n in components)
        if not components:
            raise ValueError("empty component list")
        for family, rank in components:
            _validate_type(family, rank)
        self.components = components
        self.rank = sum(n for _, n in components)

        cartan = [[0] * self.rank for _ in range(self.rank)]
        symmetrizer: list[int] = []
        offset = 0
        self._component_slices = []
        for family, rank in components:
            block = _component_cartan(family, rank)
            for i in range(rank):
                for j in range(rank):
                    cartan[offset + i][offset + j] = block[i][j]
            symmetrizer.extend(_component_symmetrizer(family, rank))
            self._component_slices.append((offset, offset + rank))
            offset += rank
        self.cartan = tuple(tuple(row) for row in cartan)
        self.symmetrizer = tuple(symmetrizer)

        self.positive_roots = self._generate_positive_roots()
        expected = sum(_POSITIVE_ROOT_COUNT[f](n) for f, n in components)
        if len(self.positive_roots) != expected:
            raise AssertionError("positive root closure has the wrong size")

        # (omega_i, omega_j) = d_i * (A^-1)_ij; short roots have length^2 = 2
        self._cartan_inv = mat_inverse(frac_matrix(self.cartan))
        self._fw_gram: Matrix = tuple(
            tuple(self.symmetrizer[i] * self._cartan_inv[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        # row k: integer vector p with <lam, alpha_k^vee> = p . lam
        self._coroot_rows = tuple(
            self._coroot_pairing_row(alpha) for alpha in self.positive_roots
        )
        self._root_weights = tuple(self.root_as_weight(a) for a in self.positive_roots)

    # -- construction helpers -------------------------------------------

    def _generate_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        roots = set(simple)
        frontier = set(simple)
        while frontier:
            new = set()
            for beta in frontier:
                pair = [sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
                        for i in range(self.rank)]
                for i in range(self.rank):
                    img = list(beta)
                    img[i] -= pair[i]
                    timg = tuple(img)
                    if timg not in roots and all(x >= 0 for x in timg):
                        new.add(timg)
            roots |= new
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def _coroot_pairing_row(self, alpha: Sequence[int]) -> tuple[int, ...]:
        norm = self._root_norm(alpha)
        row = []
        for j in range(self.rank):
            entry = Fraction(2 * alpha[j] * self.symmetrizer[j]) / norm
            if entry.denominator != 1:
                raise AssertionError("coroot pairing row is not integral")
            row.append(int(entry))
        return tuple(row)

    def _root_norm(self, alpha: Sequence[int]) -> Fraction:
        return sum(
            (Fraction(alpha[i] * alpha[j] * self.symmetrizer[i] * self.cartan[i][j])
             for i in range(self.rank) for j in range(self.rank) if alpha[i] and alpha[j]),
            Fraction(0),
        )

    # -- basic operations ------------------------------------------------

    def check_weight(self, lam: Sequence[int]) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise ValueError(f"weight has length {len(lam)}, expected rank {self.rank}")
        return lam

    def rho(self) -> Weight:
        return (1,) * self.rank

    def pair_coroot(self, lam: Sequence[int], alpha: Sequence[int]) -> int:
        """<lam, alpha^vee> for a root alpha given in simple-root coordinates."""
        row = self._coroot_pairing_row(alpha)
        return sum(r * x for r, x in zip(row, lam))

    def inner_product(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """W-invariant scalar product (short roots of each component have norm 2)."""
        return dot(lam, mat_vec(self._fw_gram, mu))

    def root_as_weight(self, alpha: Sequence[int]) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        return tuple(
            sum(self.cartan[i][j] * alpha[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def simple_root_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Expansion of a weight over the simple roots (rational in general)."""
        return mat_vec(self._cartan_inv, self.check_weight(lam))

    def positive_root_weights(self) -> tuple[Weight, ...]:
        return self._root_weights

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in self.check_weight(lam))

    def shifted_pairings(self, lam: Sequence[int]) -> tuple[int, ...]:
        """<lam + rho, alpha^vee> over all positive roots, in the frozen order."""
        v = [x + 1 for x in lam]
        return tuple(sum(r * x for r, x in zip(row, v)) for row in self._coroot_rows)

    def is_regular_shifted(self, lam: Sequence[int]) -> bool:
        """Whether lam + rho pairs nonzero with every positive coroot."""
        self.check_weight(lam)
        return all(p != 0 for p in self.shifted_pairings(lam))

    def shifted_length(self, lam: Sequence[int]) -> int:
        """Inversion count of lam + rho (lam + rho must be regular)."""
        return sum(1 for p in self.shifted_pairings(lam) if p < 0)

    def make_dominant_shifted(
        self, lam: Sequence[int]
    ) -> Optional[tuple[Weight, int, tuple[int, ...]]]:
        """Dominant representative of lam under the rho-shifted action.

        Returns (lam_plus, length, word) with word a reduced expression for
        the minimising Weyl element (simple reflection indices, applied to
        the weight left to right), or None when lam + rho is singular.
        The greedy reflection count is cross-checked against the inversion
        count of lam + rho; the two must agree.
        """
        lam = self.check_weight(lam)
        v = [x + 1 for x in lam]  # lam + rho in fundamental coordinates
        inversions = sum(1 for p in self.shifted_pairings(lam) if p < 0)
        word = []
        for _ in range(len(self.positive_roots) + 1):
            neg = next((i for i in range(self.rank) if v[i] < 0), None)
            if neg is None:
                break
            c = v[neg]
            for i in range(self.rank):
                v[i] -= c * self.cartan[i][neg]
            word.append(neg)
        if any(x == 0 for x in v):
            return None  # lam + rho is singular
        if len(word) != inversions:
            raise AssertionError("reflection count disagrees with inversion count")
        lam_plus = tuple(x - 1 for x in v)
        return lam_plus, len(word), tuple(word)

    def dominant_representative(self, mu: Sequence[int]) -> Weight:
        """Unique dominant weight in the (unshifted) W-orbit of mu."""
        v = list(self.check_weight(mu))
        for _ in range(2 * len(self.positive_roots) + 1):
            neg = next((i for i in range(self.rank) if v[i] < 0), None)
            if neg is None:
                return tuple(v)
            c = v[neg]
            for i in range(self.rank):
                v[i] -= c * self.cartan[i][neg]
        raise AssertionError("orbit walk did not terminate")

    def dual_weight(self, mu: Sequence[int]) -> Weight:
        """-w_0 mu for dominant mu (highest weight of the dual module)."""
        mu = self.check_weight(mu)
        if not self.is_dominant(mu):
            raise ValueError("dual_weight expects a dominant weight")
        return self.dominant_representative(tuple(-x for x in mu))

    def weyl_dimension(self, mu: Sequence[int]) -> int:
        """dim L(mu) by the Weyl dimension formula, as an exact integer."""
        mu = self.check_weight(mu)
        if not self.is_dominant(mu):
            raise ValueError("weyl_dimension expects a dominant weight")
        shifted = [x + 1 for x in mu]
        num = prod(sum(r * x for r, x in zip(row, shifted)) for row in self._coroot_rows)
        den = prod(sum(row) for row in self._coroot_rows)
        q, rem = divmod(num, den)
        if rem:
            raise AssertionError("Weyl dimension is not integral")
        return q

    def weyl_order(self) -> int:
        order = 1
        for family, rank in self.components:
            table = _WEYL_ORDER[family]
            order *= table(rank)
        return order

    def reflect_simple(self, i: int, lam: Sequence[int]) -> Weight:
        """Image of a weight under the simple reflection s_i (unshifted)."""
        lam = self.check_weight(lam)
        c = lam[i]
        return tuple(lam[j] - c * self.cartan[j][i] for j in range(self.rank))

    def describe(self) -> str:
        return " x ".join(f"{f}{n}" for f, n in self.components)

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.describe()})"


def build_root_system(spec: Iterable[tuple[str, int]]) -> RootSystem:
    """Build the root system of a product of simple types, e.g. [("A", 2)]."""
    return RootSystem(tuple(spec))


def parse_type(text: str) -> tuple[tuple[str, int], ...]:
    """Parse 'A2', 'A1xA1', 'D4' ... into a component list."""
    parts = text.replace("*", "x").split("x")
    comps = []
    for part in parts:
        part = part.strip()
        if len(part) < 2 or not part[0].isalpha():
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        comps.append((part[0].upper(), int(part[1:])))
    return tuple(comps)

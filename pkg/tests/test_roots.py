"""Kernel tests: exact root system arithmetic and chamber walks."""

import random
from fractions import Fraction

import pytest

from wondercoh import build_root_system
from wondercoh.oracles import weyl_group_bruteforce


def test_positive_root_counts():
    assert len(build_root_system([("A", 1)]).positive_roots) == 1
    assert len(build_root_system([("G", 2)]).positive_roots) == 6
    assert len(build_root_system([("B", 3)]).positive_roots) == 9
    assert len(build_root_system([("D", 4)]).positive_roots) == 12
    assert len(build_root_system([("F", 4)]).positive_roots) == 24
    assert len(build_root_system([("E", 6)]).positive_roots) == 36


def test_product_system():
    sys = build_root_system([("A", 1), ("A", 1)])
    assert sys.cartan == ((2, 0), (0, 2))
    assert len(sys.positive_roots) == 2


@pytest.mark.parametrize("bad", [("E", 9), ("A", 0), ("F", 5), ("H", 3), ("G", 3)])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system([bad])


def test_pair_coroot_examples():
    a2 = build_root_system([("A", 2)])
    assert a2.pair_coroot((1, 0), (1, 0)) == 1  # <omega_1, alpha_1^vee>
    assert a2.pair_coroot((1, 0), (0, 1)) == 0
    assert a2.pair_coroot(a2.rho(), (1, 1)) == 2  # coroot of the highest root
    a1 = build_root_system([("A", 1)])
    assert a1.pair_coroot((-3,), (1,)) == -3


def test_inner_product_examples():
    a1 = build_root_system([("A", 1)])
    assert a1.inner_product((1,), (1,)) == Fraction(1, 2)
    prod = build_root_system([("A", 1), ("A", 1)])
    # (omega_1 + omega_2, alpha_1 + alpha_2) with orthogonal factors
    alpha_sum = tuple(
        a + b
        for a, b in zip(prod.root_as_weight((1, 0)), prod.root_as_weight((0, 1)))
    )
    assert prod.inner_product((1, 1), alpha_sum) == 2
    a2 = build_root_system([("A", 2)])
    assert a2.inner_product(a2.rho(), (0, 0)) == 0


def test_rho_and_symmetrizer():
    for spec in [[("A", 2)], [("B", 2)], [("G", 2)], [("B", 3)]]:
        sys = build_root_system(spec)
        assert sys.rho() == (1,) * sys.rank
        for i in range(sys.rank):
            simple = tuple(int(j == i) for j in range(sys.rank))
            assert sys.inner_product(sys.rho(), sys.root_as_weight(simple)) \
                == sys.symmetrizer[i]


def test_root_as_weight_examples():
    a1 = build_root_system([("A", 1)])
    assert a1.root_as_weight((1,)) == (2,)
    a2 = build_root_system([("A", 2)])
    assert a2.root_as_weight((1, 0)) == (2, -1)
    assert a2.root_as_weight((1, 1)) == (1, 1)


def test_root_weight_representations_agree():
    b2 = build_root_system([("B", 2)])
    lam = (3, -2)
    for alpha in b2.positive_roots:
        aw = b2.root_as_weight(alpha)
        assert b2.pair_coroot(aw, alpha) == 2
        lhs = b2.inner_product(lam, aw)
        assert b2.pair_coroot(lam, alpha) * b2.inner_product(aw, aw) == 2 * lhs


def test_dominance_and_regularity():
    a1 = build_root_system([("A", 1)])
    assert a1.is_dominant((3,))
    assert not a1.is_regular_shifted((-1,))
    a2 = build_root_system([("A", 2)])
    assert a2.is_regular_shifted((-2, -2))
    assert not a2.is_dominant((-2, -2))


def test_make_dominant_shifted_examples():
    a1 = build_root_system([("A", 1)])
    assert a1.make_dominant_shifted((-3,)) == ((1,), 1, (0,))
    assert a1.make_dominant_shifted((-1,)) is None
    a2 = build_root_system([("A", 2)])
    plus, length, word = a2.make_dominant_shifted((-2, -2))
    assert plus == (0, 0) and length == 3 and len(word) == 3


def test_make_dominant_idempotent():
    a2 = build_root_system([("A", 2)])
    plus, _, _ = a2.make_dominant_shifted((-4, 1))
    assert a2.make_dominant_shifted(plus) == (plus, 0, ())


def test_orbit_property_simple_reflections():
    rng = random.Random(7)
    for spec in [[("A", 2)], [("B", 2)], [("A", 1), ("A", 1)]]:
        sys = build_root_system(spec)
        for _ in range(60):
            lam = tuple(rng.randint(-6, 6) for _ in range(sys.rank))
            made = sys.make_dominant_shifted(lam)
            if made is None:
                continue
            for i in range(sys.rank):
                # s_i * lam = s_i(lam + rho) - rho
                shifted = tuple(x + 1 for x in lam)
                reflected = tuple(x - 1 for x in sys.reflect_simple(i, shifted))
                other = sys.make_dominant_shifted(reflected)
                assert other is not None and other[0] == made[0]


def test_inner_product_weyl_invariance():
    rng = random.Random(11)
    for spec in [[("B", 2)], [("G", 2)], [("A", 2)]]:
        sys = build_root_system(spec)
        for _ in range(40):
            lam = tuple(rng.randint(-5, 5) for _ in range(sys.rank))
            mu = tuple(rng.randint(-5, 5) for _ in range(sys.rank))
            base = sys.inner_product(lam, mu)
            for i in range(sys.rank):
                assert sys.inner_product(
                    sys.reflect_simple(i, lam), sys.reflect_simple(i, mu)
                ) == base


def test_dual_weight_examples():
    a1 = build_root_system([("A", 1)])
    assert a1.dual_weight((3,)) == (3,)
    a2 = build_root_system([("A", 2)])
    assert a2.dual_weight((1, 0)) == (0, 1)
    assert a2.dual_weight((1, 1)) == (1, 1)
    with pytest.raises(ValueError):
        a2.dual_weight((-1, 0))


def test_weyl_dimension_examples():
    a1 = build_root_system([("A", 1)])
    assert a1.weyl_dimension((3,)) == 4
    a2 = build_root_system([("A", 2)])
    assert a2.weyl_dimension((1, 1)) == 8
    assert a2.weyl_dimension((2, 0)) == 6
    b3 = build_root_system([("B", 3)])
    assert b3.weyl_dimension((1, 0, 0)) == 7
    assert b3.weyl_dimension((0, 0, 1)) == 8  # spin representation
    e6 = build_root_system([("E", 6)])
    assert e6.weyl_dimension((1, 0, 0, 0, 0, 0)) == 27
    assert e6.weyl_dimension((1, 0, 0, 0, 0, 1)) == 650


def test_weyl_dimension_dual_invariance():
    rng = random.Random(3)
    a2 = build_root_system([("A", 2)])
    for _ in range(50):
        mu = (rng.randint(0, 6), rng.randint(0, 6))
        assert a2.weyl_dimension(mu) == a2.weyl_dimension(a2.dual_weight(mu))


def test_weyl_orders():
    assert build_root_system([("A", 2)]).weyl_order() == 6
    assert build_root_system([("A", 1), ("A", 1)]).weyl_order() == 4
    assert build_root_system([("E", 6)]).weyl_order() == 51840


def test_chamber_walk_matches_bruteforce():
    rng = random.Random(42)
    for spec in [[("A", 2)], [("B", 2)], [("A", 1), ("A", 1)], [("G", 2)], [("A", 3)]]:
        sys = build_root_system(spec)
        brute = weyl_group_bruteforce(sys)
        for _ in range(200):
            lam = tuple(rng.randint(-8, 8) for _ in range(sys.rank))
            fast = sys.make_dominant_shifted(lam)
            slow = brute.make_dominant_shifted(lam)
            if fast is None:
                assert slow is None
            else:
                assert slow == (fast[0], fast[1])

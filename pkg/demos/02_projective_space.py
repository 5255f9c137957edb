"""P^3 as a rank one wonderful variety.

The projective space P^{2n-1} compactifies a rank one homogeneous space
for Spin_{2n}; its single spherical root gamma and the pic generator
sit inside the weight lattice of D_n.  The decomposition then reproduces
the classical cohomology of O(k): a string of irreducibles in degree 0
for k >= 0, nothing in the band -4 <= k <= -1, and the dual string in
top degree below that.
"""

from math import comb

from wondercoh import build_case, cohomology_table, serre_dual_weight

X = build_case("PSO/PSO(2)")
print("variety:", X.name, " group:", X.group.describe(), " N =", X.dimension_N)
print("spherical root:", list(X.spherical_roots[0]), " pic generator:", list(X.pic_basis[0]))
print()

print(" k | degrees          | total dim | binomial check")
for k in range(4, -9, -1):
    lam = X.weight_from_pic_coords((k,))
    table = cohomology_table(X, lam)
    dims = table.dimensions_by_degree()
    if k >= 0:
        expected = {0: comb(3 + k, 3)}
    elif k <= -4:
        expected = {3: comb(-k - 1, 3)}
    else:
        expected = {}
    assert dims == expected
    cells = ", ".join(f"H^{d}={v}" for d, v in dims.items()) or "all zero"
    print(f"{k:>2} | {cells:<16} | {sum(dims.values()):>9} | ok")

print()
lam = X.weight_from_pic_coords((2,))
dual = serre_dual_weight(X, lam)
print("Serre dual of O(2) is O(%d), matching -k-4 on P^3" % X.pic_contains(dual)[0])

table = cohomology_table(X, lam)
print("H^0(O(2)) splits as:")
for c in table.constituents(0):
    print("  L(%s)  dim %d" % (list(c.highest_weight), c.dimension))

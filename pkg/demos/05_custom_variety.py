"""Loading a user-supplied variety descriptor.

Descriptors are JSON documents naming the group, the spherical roots and
a pic basis (fundamental-weight coordinates), the white nodes of the
closed-orbit parabolic (1-based), and optionally the orthogonal root
pairs behind the spherical reflections.  The loader re-derives N and
2 rho_X and refuses anything that fails validation, so wrong data cannot
reach the evaluation.
"""

import json
import tempfile

from wondercoh import CatalogError, cohomology_table, load_variety, validate

# the 3-dimensional quadric for Spin_4, written out by hand
doc = {
    "name": "demo-quadric",
    "group": [["D", 2]],
    "spherical_roots": [[1, 1]],
    "pic_basis": [[1, 1]],
    "q_simple_roots": [],
    "sgamma": [[[1, 0], [0, 1]]],
}

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(doc, fh)
    path = fh.name

X = load_variety(path)
print(validate(X))
print()

for k in (2, -1, -4):
    table = cohomology_table(X, X.weight_from_pic_coords((k,)))
    print(f"O({k}):", table.dimensions_by_degree() or "zero")

# a descriptor whose 'spherical root' is an honest root must be refused
bad = dict(doc, spherical_roots=[[2, 0]], sgamma=None, name="broken")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(bad, fh)
    bad_path = fh.name

try:
    load_variety(bad_path)
except CatalogError as exc:
    print()
    print("rejected as expected:")
    print(" ", exc)

# FFLV polytopes: inequalities from Dyck paths, lattice points, and the
# checks that make them useful (dimension, Minkowski sums, normality).

from favourable.polytope import (
    build_polytope,
    check_minkowski_decomposition,
    check_normality,
    dyck_paths,
    lattice_points,
    vertices,
)
from favourable.rootsys import Family, LieType, weyl_dim

a2 = LieType(Family.A, 2)
for path in dyck_paths(a2):
    print(path)

poly = build_polytope(a2, (1, 1))
print(poly.to_ieqs())
S = lattice_points(poly)
print(len(S), "points; adjoint module has dimension", weyl_dim(a2, (1, 1)))
print("vertices:", [tuple(int(x) for x in v) for v in vertices(poly)])

# a few weights in every supported type
for t, w in [(LieType(Family.A, 3), (1, 1, 1)), (LieType(Family.C, 2), (2, 1)),
             (LieType(Family.C, 3), (0, 1, 1)), (LieType(Family.G2, 2), (1, 1))]:
    n = len(lattice_points(build_polytope(t, w)))
    print(t, w, n, weyl_dim(t, w), bool(check_minkowski_decomposition(t, w)))

g2 = build_polytope(LieType(Family.G2, 2), (1, 1))
print("G2 (1,1) normal up to 3:", bool(check_normality(g2, 3)))

# Rays of the normal fan of a regular type-A FFLV polytope and the Demazure
# roots of the corresponding toric variety.

from favourable.polytope import build_polytope
from favourable.rootsys import Family, LieType
from favourable.toric import (
    automorphism_summary,
    demazure_roots,
    facet_normals,
    fan_rays_A_regular,
    verify_fan_rays,
)

rays = fan_rays_A_regular(2)
for r in rays:
    print(r.kind, r.vector)

print(facet_normals(build_polytope(LieType(Family.A, 2), (1, 1))))
print("rays match:", bool(verify_fan_rays(2, (1, 1))))

for r in demazure_roots(rays):
    print("m =", r.m, "against", r.ray.vector)

for n in (1, 2, 3):
    print(n, automorphism_summary(n))

# Tensor layers and valuations.  The n-th layer of the essential semigroup
# should be the n-fold sum of S(lambda); valuations of the basis functionals
# on the exponential orbit should give the same points.

from favourable.essential import StructureConstants, essential_semigroup_layer, essential_set
from favourable.polytope import build_polytope, minkowski_power
from favourable.repmod import exp_orbit_product, sl2_rep, wedge_rep_sl
from favourable.rootsys import Family, LieType
from favourable.toric import hilbert_function, valuation_semigroup_layer

# exp(u f) v for the 3-dim sl_2 module
print(exp_orbit_product(sl2_rep(2)).terms)

m = wedge_rep_sl(3, 2)
es = essential_set(m).es
for n in (1, 2):
    layer = essential_semigroup_layer(m, n)
    val = valuation_semigroup_layer(m, n)
    print(n, len(layer), layer == minkowski_power(es, n), val == layer)

poly = build_polytope(LieType(Family.A, 3), (0, 1, 0))
print("level 2 inside 2P:", all(poly.contains_scaled(p, 2) for p in valuation_semigroup_layer(m, 2)))
print("Hilbert function:", [hilbert_function(es, n) for n in range(4)])

# leading structure constants are binomial products
sc = StructureConstants(wedge_rep_sl(3, 2, radical=True))
c = sc((1, 0, 0, 0), (1, 0, 0, 1))
print(c.value, c.expected, "sub-leading terms vanish:", not any(c.lower.values()))

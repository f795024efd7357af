# Essential monomials of Lambda^2 C^4, first for the four root vectors that
# generate it from w_12, then for all six lowering operators of sl_4.

from favourable.essential import essential_set
from favourable.repmod import wedge_rep_sl
from favourable.rootsys import exponent_label, monomial_compare

m = wedge_rep_sl(3, 2, radical=True)
print("roots:", m.root_labels)  # a[1,3], a[1,2], a[2,3], a[2,2]

# the order decides which of the two degree-2 candidates survives
print("f13 f22 < f12 f23:", monomial_compare((1, 0, 0, 1), (0, 1, 1, 0)) < 0)

res = essential_set(m)
for p in res.es:
    print(p, exponent_label(p, m.root_labels))
print("PBW Hilbert vector", res.pbw_hilbert)

print("generators of the monomial ideal:")
for g in res.annihilator_gens:
    print("  ", exponent_label(g, m.root_labels))

# with every root the extra operators only add generators of degree one
full = essential_set(wedge_rep_sl(3, 2))
print(len(full.es), "essential exponents in", len(full.module.root_labels), "variables")
print([exponent_label(g, full.module.root_labels) for g in full.annihilator_gens if sum(g) == 1])

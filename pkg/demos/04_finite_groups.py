"""Closing finite matrix groups generated by diagram reflections.

Run with: python demos/04_finite_groups.py
"""

from reflektor.reflrep import preset, circuit_rep, gnn3_rep
from reflektor.engine import (closure, element_order, scalar_power_check,
                              center_order, check_relation,
                              monomial_group_order)

print("Icosahedral symmetry from a decorated triangle diagram:")
rep = preset("h3_coxeter")
res = closure(rep.gens)
t = rep.word([1, 2, 3])
print("  order %d, center %d, (s1 s2 s3)^5 scalar = %s"
      % (res.order, center_order(res, rep.gens),
         scalar_power_check(t, 5)))

print()
print("Monomial groups from circuit diagrams, against an independent count:")
for p, n in ((2, 3), (3, 3), (4, 3), (2, 4), (3, 4)):
    rep = circuit_rep(p, n)
    order = closure(rep.gens, store_elements=False).order
    print("  (p=%d, n=%d): closure %-4d  monomial model %-4d"
          % (p, n, order, monomial_group_order(p, n)))

print()
print("The n-indexed rank-3 family of order 6 n^2:")
for n in range(2, 7):
    rep = gnn3_rep(n, 1)
    order = closure(rep.gens, store_elements=False).order
    rel = check_relation(rep.gens, [1, 2, 3], 2,
                         rhs_word=[2, 3, 1], rhs_exponent=2)
    print("  n=%d: order %-4d  (s1s2s3)^2 = (s2s3s1)^2: %s" % (n, order, rel))

print()
print("Two exceptional rank-3 groups over Q(zeta_7) and Q(zeta_15):")
for name, k in (("g24_334", 7), ("g27_a", 5)):
    rep = preset(name)
    res = closure(rep.gens)
    t = rep.word([1, 2, 3])
    print("  %s: order %d, center %d, t^%d scalar = %s, delta = %s"
          % (name, res.order, center_order(res, rep.gens), k,
             scalar_power_check(t, k), rep.delta()))

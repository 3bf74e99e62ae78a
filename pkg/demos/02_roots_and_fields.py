"""Exact cyclotomic arithmetic with the roots 4 cos^2(k pi / r).

Run with: python demos/02_roots_and_fields.py
"""

from reflektor.cyclo import (field_ctx, root_of_v, sqrt_root, named_constant,
                             galois_norm, root_identity_suite,
                             classification_search)
from reflektor.upoly import v_poly

print("root_of_v(r, k) builds 4cos^2(k pi / r) inside Q(zeta_r):")
for r, k in ((5, 1), (5, 2), (7, 1), (12, 1)):
    g = root_of_v(r, k)
    print("  (r=%d, k=%d): %-22s  v_%d at it -> %s"
          % (r, k, g, r, v_poly(r).eval(g)))

tau = named_constant("tau", 5)
print()
print("tau = (3+sqrt5)/2 is the (5,1) root:", tau == root_of_v(5, 1))
print("its Galois norm over Q(zeta_5):", galois_norm(tau))

print()
print("sqrt_root gives the positive square root 2cos(k pi / r):")
s = sqrt_root(5, 1)
print("  sqrt over Q(zeta_10):", s)
print("  squares back:", s * s == root_of_v(5, 1).lift(field_ctx(10)))

print()
print("The ladder of weighted root identities, all (r, k) with r <= 20:")
res = root_identity_suite(20)
print("  %d cases, %d failures" % (res.cases, len(res.failures)))

print()
print("Searching small roots with alpha*beta = 4*gamma or "
      "alpha+beta+gamma = 4 (bound 12):")
got = classification_search(12)
print("  product solutions:", got["product"])
print("  sum solutions:    ", got["sum"])
print("  skipped triples (conductor too large):", got["skipped"])

"""All extensions of Q_3(zeta_8) of degree 9 with indices (8, 8, 0).

Run:  python walkthroughs/03_classification.py
"""

from collections import Counter

from threeterm import (ClassificationRequest, count_standard_forms, enumerate_standard_forms,
                       fixture, is_galois, splitting_field)

K = fixture("Q3z8")
req = ClassificationRequest(K, k=2, i0=8)
print(f"A0 = {req.A0}, b0 = {req.b0}, break = {req.B}; closed-form count = {count_standard_forms(req)}")

for sf in enumerate_standard_forms(req):
    v = is_galois(sf)
    sfd = splitting_field(sf)
    print(f"  omega={sf.omega.literal():8} gamma={sf.gamma.literal():8} "
          f"galois={str(v.galois):5} splitting field degree={sfd.degree:3} radicand {sfd.radicand}")

# When omega = -1 the additive map x -> x^9 + omega x is zero on F_9, so all
# nine gamma survive; otherwise it is onto and gamma = 0.
print(Counter(sf.omega.literal() for sf in enumerate_standard_forms(req)))

# Larger classes: over F_3((t)) with i0 = 16 there are free digits alpha_j too.
E = fixture("F3t")
big = ClassificationRequest(E, 2, 16)
print("F_3((t)), i0 = 16:", count_standard_forms(big), "forms, e.g.",
      next(enumerate_standard_forms(big)).render())

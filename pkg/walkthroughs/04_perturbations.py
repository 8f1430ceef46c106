"""How coefficients move when the uniformizer is perturbed.

For pi~ = pi_L + r pi_L^(ell+1), the prediction gives one coefficient of
the new minimum polynomial modulo pi^(t+1) without computing it.  Applied
to a degree-9 extension with indices (7, 3, 0) it shows that no uniformizer
has a minimum polynomial with fewer than five terms.

Run:  python walkthroughs/04_perturbations.py
"""

from threeterm import fixture, indices, minpoly_uniformizer, perturb_predict, teich_lift

f = fixture("three_index_deg9")        # X^9 + pi X^7 - pi X^6 + pi X^3 - pi over Q3z8
K = f.field
F = K.residue
print("indices:", indices(f).idx)

fewest = None
for a0 in F.nonzero():
    r0 = teich_lift(a0, K)
    fh = minpoly_uniformizer(f, {1: r0})          # scaled uniformizer r0 * pi_L
    for a1 in F.elements():
        r1 = teich_lift(a1, K)
        p1 = perturb_predict(fh, 1, r1, 0)       # c~_1 mod pi^2
        p3 = perturb_predict(fh, 1, r1, 1)       # c~_3 mod pi^2
        actual = minpoly_uniformizer(fh, {1: K.one(), 2: r1})
        assert actual.coeff(1).truncate(2) == p1.value
        assert actual.coeff(3).truncate(2) == p3.value
        # at least one of c~_1, c~_3 has valuation 1
        assert p1.value.val() == 1 or p3.value.val() == 1
        n = actual.nonzero_terms()
        fewest = n if fewest is None else min(fewest, n)

print("predictions confirmed for all 72 pairs (r0, r1)")
print("fewest terms seen:", fewest)

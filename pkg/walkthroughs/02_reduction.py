"""Reducing a messy polynomial to its three-term standard form.

Any uniformizer of the same extension gives a different Eisenstein
polynomial; the reduction always lands on the same standard form.

Run:  python walkthroughs/02_reduction.py
"""

import random

from threeterm import (EisensteinPoly, fixture, indices, l_equiv, minpoly_uniformizer,
                       normalize_constant, reduce_to_standard, teich_lift)

rng = random.Random(1)
K = fixture("F3t")          # F_3((t)), 12 digits
F = K.residue

# A degree-9 polynomial with indices (16, 16, 0): A0 = 2, b0 = 2, break B = 2.
f = EisensteinPoly(K, 9, {2: K.parse("t^2 + t^3"), 4: K.parse("t^3"), 9: K.parse("2*t + t^2 + t^4")})
print("f indices:", indices(f).idx)

sf, trace = reduce_to_standard(f)
print("standard form:", sf.dumps().strip().replace("\n", " "))
print("  polynomial:", sf.render())
print("  steps:", ", ".join(f"{s.ell}:{s.case}" for s in trace.steps[:8]), "...")

# The result is 1-equivalent to f after the constant-term normalization.
_, fn = normalize_constant(f)
print("  1-equivalent to normalized f:", l_equiv(fn, sf.render(), 1))

# Scramble: minimum polynomial of u*pi_L + a*pi_L^2 + b*pi_L^3 for random
# Teichmueller u, a, b.  Every scramble reduces to the same form.
for _ in range(3):
    expr = {e: teich_lift(F.from_code(rng.randrange(1 if e == 1 else 0, 3)), K) for e in (1, 2, 3)}
    g = minpoly_uniformizer(f, expr)
    out, _ = reduce_to_standard(g)
    print(f"  scrambled ({g.nonzero_terms()} terms) -> same form: {out == sf}")

"""Ramification invariants of a few Eisenstein polynomials.

Run:  python walkthroughs/01_invariants.py
"""

from fractions import Fraction

from threeterm import EisensteinPoly, fixture, indices, phi_LK, ram_break, rho

# Base fields ship with the package: Q3z8 is Q_3(zeta_8) (residue field F_9),
# F3t is F_3((t)).  Elements are kept modulo pi^12.
K = fixture("Q3z8")
print("base field:", K)

# Coefficients follow f = X^n - c_1 X^(n-1) + ... + (-1)^n c_n, so
# X^9 + 3X^8 - 3 has c_1 = -3 and c_9 = 3.
f = EisensteinPoly(K, 9, {1: K.from_int(-3), 9: K.from_int(3)})
prof = indices(f)
print("X^9 + 3X^8 - 3:   indices", prof.idx, " break", ram_break(prof))

# The Hasse-Herbrand function is the identity up to the break and has
# slope 1/9 afterwards.
for x in (Fraction(1, 2), 1, 2, 5):
    print(f"  phi_L/K({x}) = {phi_LK(prof, x)}")

# rho_h(ell) says how many digits of c_h matter for ell-equivalence.
print("  rho_h(2) for h = 1..9:", [rho(prof, h, 2) for h in range(1, 10)])

# Three packaged polynomials with more interesting profiles.
for name, text in (("three_index_deg9", "X^9 + pi X^7 - pi X^6 + pi X^3 - pi over Q3z8"),
                   ("deg6_char3", "X^6 - t X^5 + t X^4 + t over F3t"),
                   ("three_index_q3", "degree 9 over Q_3 with c_5 = pi^2")):
    g = fixture(name)
    p = indices(g)
    print(f"{text}:  indices {p.idx}  (u = {p.u}, k = {p.k}, two-index: {p.two_index})")

from fractions import Fraction

import pytest

from randgen import F3T, Q3Z8, all_fields, field, rand_degree, rand_eis, rand_uniformizer_expr
from threeterm import (INF, EisensteinPoly, InsufficientPrecision, NotEisenstein, NotTwoIndex,
                       fixture, indices, l_equiv, minpoly_uniformizer, phi_j, phi_LK, ram_break,
                       rho, teich_lift, tilde_indices)


def poly(K, n, terms):
    return EisensteinPoly(K, n, {h: K.parse(t) if isinstance(t, str) else t for h, t in terms.items()})


def test_validation_examples():
    K = fixture("Q3z8")
    f = poly(K, 9, {1: "-3", 9: "3"})            # X^9 + 3X^8 - 3
    assert (f.n, f.k, f.u) == (9, 2, 1)
    with pytest.raises(NotEisenstein):
        poly(K, 9, {9: "1"})                      # X^9 - 1
    with pytest.raises(NotEisenstein):
        poly(K, 9, {9: "9"})
    with pytest.raises(NotEisenstein):
        poly(K, 9, {3: "1", 9: "3"})
    E = fixture("F3t")
    g = poly(E, 6, {1: "t", 2: "t", 6: "t"})      # X^6 - tX^5 + tX^4 + t
    assert (g.n, g.k, g.u) == (6, 1, 2)


def test_tilde_examples():
    assert tuple(tilde_indices(fixture("three_index_deg9"))) == (7, 3, 0)
    assert tuple(tilde_indices(fixture("deg6_char3"))) == (4, 0)
    K = fixture("Q3")
    f = poly(K, 9, {9: "3"})
    assert tuple(tilde_indices(f)) == (INF, INF, 0)
    assert indices(f).idx == (18, 9, 0)


def test_index_examples():
    assert indices(fixture("three_index_deg9")).idx == (7, 3, 0)
    assert indices(fixture("deg6_char3")).idx == (4, 0)
    assert indices(fixture("three_index_q3")).idx == (12, 3, 0)
    # closed form p^2 (A_1 + e_K) - b_1 with p = 3, A_1 = 1, b_1 = 6, e_K = 1
    assert indices(fixture("three_index_q3")).idx[0] == 9 * (1 + 1) - 6
    E = fixture("F3t")
    f = poly(E, 9, {1: "t^2", 3: "t", 9: "t"})
    assert indices(f).idx == tuple(tilde_indices(f))


def test_break_examples():
    pr71 = indices(fixture("two_index_deg9"))
    assert pr71.idx == (8, 8, 0) and ram_break(pr71) == 1
    K = fixture("Q3z8")
    pr = indices(poly(K, 9, {2: "3", 9: "3"}))     # i0 = 9 - 2 = 7
    assert pr.idx == (7, 7, 0) and ram_break(pr) == Fraction(7, 8)
    with pytest.raises(NotTwoIndex):
        ram_break(indices(fixture("three_index_deg9")))


def test_phi_examples():
    pr = indices(fixture("two_index_deg9"))
    for x in (Fraction(0), Fraction(1, 2), Fraction(1)):
        assert phi_LK(pr, x) == x
    assert phi_LK(pr, 2) == Fraction(10, 9)
    assert phi_j(pr, 0, 3) == 11
    assert phi_LK(indices(fixture("three_index_deg9")), 0) == 0


def test_rho_examples():
    pr = indices(fixture("two_index_deg9"))
    assert rho(pr, 1, 1) == 2
    assert rho(pr, 9, 1) == 2                      # ell <= B gives ell + 1
    assert rho(pr, 9, 2) == 3                      # ceil(phi(2)) + 1
    K = fixture("Q3z8")
    pr7 = indices(poly(K, 9, {2: "3", 9: "3"}))   # A0 = 1, b0 = 2
    assert rho(pr7, 1, 1) == pr7.A0


def test_l_equiv_examples():
    K = fixture("Q3z8")
    f = poly(K, 9, {1: "-3", 9: "3"})
    g = poly(K, 9, {1: "-3", 9: "3 + 9"})
    for ell in range(1, 6):
        assert l_equiv(f, f, ell)
    assert l_equiv(f, g, 1)
    assert not l_equiv(f, g, 2)


def _random_profiles(rng, count):
    fields = all_fields()
    out = []
    while len(out) < count:
        K = rng.choice(fields)
        f = rand_eis(rng, K, rand_degree(rng, K))
        try:
            out.append((f, indices(f)))
        except InsufficientPrecision:
            continue
    return out


def check_profile_invariants(f, pr):
    """Ordering, p not dividing i~_0, and the two-index bounds; raises AssertionError."""
    idx = pr.idx
    assert idx[-1] == 0
    if idx[0] == INF:
        # only an inseparable polynomial (one in K[X^p]) has an infinite index
        assert f.field.e_K == INF and all(h % f.field.p == 0 for h in f.coeffs)
        return
    if pr.k >= 1:
        assert all(idx[j] >= idx[j + 1] for j in range(pr.k))
        assert idx[pr.k - 1] > 0 and idx[0] < INF
    if pr.u == 1 and pr.tilde[0] not in (None, INF):
        assert pr.tilde[0] % pr.p != 0
    if pr.two_index and pr.k >= 2:
        assert tuple(pr.tilde) == idx
        if pr.e_K != INF:
            assert idx[0] < pr.pk * pr.e_K


def test_profile_invariants(rng):
    for f, pr in _random_profiles(rng, 300):
        check_profile_invariants(f, pr)


def test_equal_char_indices_are_tilde(rng):
    E = field(F3T)
    for _ in range(100):
        f = rand_eis(rng, E, 9)
        pr = indices(f)
        assert pr.idx == tuple(pr.tilde)


def test_index_invariance_under_uniformizer_change(rng):
    done = 0
    while done < 200:
        K = rng.choice(all_fields())
        f = rand_eis(rng, K, rng.choice([K.p ** 2, K.p * (K.p + 1)]))
        try:
            pr = indices(f)
            g = minpoly_uniformizer(f, rand_uniformizer_expr(rng, K, terms=2))
            assert indices(g).idx == pr.idx
        except InsufficientPrecision:
            continue
        done += 1


def test_two_index_family_profiles(rng):
    """Polynomials with c_{b0} of valuation A0 carry indices (i0, ..., i0, 0)."""
    K = field(Q3Z8)
    F = K.residue
    for i0 in range(1, 9):
        A0, b0 = -(-i0 // 9), 9 * -(-i0 // 9) - i0
        if b0 % 3 == 0:
            continue
        w = F.from_code(rng.randrange(1, F.q))
        f = EisensteinPoly(K, 9, {b0: teich_lift(w, K).shift(A0), 9: K.one().shift(1)})
        pr = indices(f)
        assert pr.idx == (i0, i0, 0) and pr.two_index
        assert (pr.A0, pr.b0) == (A0, b0)
        check_profile_invariants(f, pr)

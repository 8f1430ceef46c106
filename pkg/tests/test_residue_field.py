import pytest

from threeterm import (AdditiveMapAnalysis, NotPrime, ReducibleModulus, ZeroOmega, coset_reps,
                       psi_bar_eval, rf_is_nth_power, rf_make, rf_pk_root)


@pytest.fixture(scope="module")
def F9():
    return rf_make(3, 2)


def test_prime_field_default_modulus():
    F = rf_make(3, 1)
    assert F.q == 3 and F.modulus_literal() == "g"


def test_quadratic_default_modulus(F9):
    assert F9.modulus_literal() == "g^2 + 1"
    assert F9.gen() ** 2 == F9(-1)


def test_explicit_cubic_accepted():
    F = rf_make(5, 3, "g^3 + g + 1")
    assert F.q == 125
    assert F.gen() ** 3 + F.gen() + F.one == F.zero


def test_bad_inputs():
    with pytest.raises(NotPrime):
        rf_make(4, 1)
    with pytest.raises(ReducibleModulus):
        rf_make(3, 2, "g^2 + 2")   # (g+1)(g+2)


def test_field_axioms_exhaustive(F9):
    els = list(F9.elements())
    assert len(set(els)) == 9
    for a in els:
        if a:
            assert a * a.inverse() == F9.one
        for b in els:
            assert a + b == b + a and a * b == b * a
            assert (a + b) * a == a * a + b * a


def test_pk_root_examples(F9):
    assert rf_pk_root(F9.zero, 3) == F9.zero
    assert rf_pk_root(F9.gen(), 2) == F9.gen()
    F3 = rf_make(3, 1)
    assert rf_pk_root(F3(2), 1) == F3(2)


@pytest.mark.parametrize("p,d", [(3, 2), (2, 3), (3, 4), (5, 2), (2, 4)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_pk_root_inverts_frobenius(p, d, k):
    F = rf_make(p, d)
    for x in F.elements():
        assert rf_pk_root(x ** (p ** k), k) == x


def test_psi_examples(F9):
    minus_one = F9(-1)
    for x in F9.elements():
        for w in F9.nonzero():
            assert psi_bar_eval(2, 1, 1, w, x) == x ** 9 + w * x
        assert psi_bar_eval(2, 1, 1, minus_one, x) == F9.zero
    assert psi_bar_eval(2, 1, 1, F9.gen(), F9.zero) == F9.zero
    with pytest.raises(ZeroOmega):
        psi_bar_eval(2, 1, 1, F9.zero, F9.one)


@pytest.mark.parametrize("p,d", [(3, 2), (2, 3), (3, 4), (5, 2), (2, 2)])
def test_psi_additive_exhaustive(p, d):
    F = rf_make(p, d)
    for w in list(F.nonzero())[:4 if F.q < 81 else 1]:
        for x in F.elements():
            for y in F.elements():
                assert psi_bar_eval(2, 1, 1, w, x + y) == (psi_bar_eval(2, 1, 1, w, x)
                                                             + psi_bar_eval(2, 1, 1, w, y))


def test_coset_reps_examples(F9):
    full = coset_reps(2, 1, 1, F9(-1))
    assert sorted(x.code for x in full.coset_reps) == list(range(9))
    for w in F9.nonzero():
        if w != F9(-1):
            assert [x.code for x in coset_reps(2, 1, 1, w).coset_reps] == [0]


@pytest.mark.parametrize("p,d,k", [(3, 2, 2), (2, 3, 2), (3, 4, 2), (2, 2, 2), (5, 2, 1), (2, 4, 3)])
def test_coset_structure(p, d, k):
    F = rf_make(p, d)
    omegas = list(F.nonzero())
    if F.q > 27:
        omegas = omegas[::10] + [F(-1)]
    for w in omegas:
        an = AdditiveMapAnalysis(k, 1, 1, w)
        assert len(an.coset_reps) * p ** an.rank == F.q
        keys = {tuple(an.coset_key(r)) for r in an.coset_reps}
        assert len(keys) == len(an.coset_reps)
        if an.rank == d:
            assert [r.code for r in an.coset_reps] == [0]
        for x in F.elements():
            rep = an.representative(x)
            assert an.in_image(x - rep)
            assert an.apply(an.solve(x - rep)) == x - rep


@pytest.mark.parametrize("p,d,k", [(3, 2, 2), (2, 3, 2), (3, 4, 2), (2, 2, 2), (2, 4, 3)])
def test_coset_reps_from_nonzero_root(p, d, k):
    """If psi-bar has a root z != 0, then z^{p^k} times reps of x^{p^k} - x are reps too."""
    F = rf_make(p, d)
    kappa = AdditiveMapAnalysis(k, 0, 1, F.one)
    assert kappa.coefficient == F.one
    for w in F.nonzero():
        an = AdditiveMapAnalysis(k, 1, 1, w)
        roots = [z for z in F.nonzero() if an.apply(z) == F.zero]
        if not roots:
            continue
        z = roots[0]
        alt = [z ** (p ** k) * u for u in kappa.coset_reps]
        assert len(alt) == len(an.coset_reps)
        assert len({tuple(an.coset_key(x)) for x in alt}) == len(alt)


def test_nth_power(F9):
    assert rf_is_nth_power(F9.one, 8)
    assert rf_is_nth_power(F9(-1) * F9(-1), 8)
    assert not rf_is_nth_power(F9.gen() + F9.one, 8)   # a generator of F9^*
    assert rf_is_nth_power(F9.zero, 5)
    for a in F9.nonzero():
        assert rf_is_nth_power(a ** 2, 2)

"""Reduction of two-index degree-p^k Eisenstein polynomials to standard form.

A standard form is the three-term polynomial

    X^{p^k} + (-1)^{b0} w pi^{A0} X^{p^k-b0} + (-1)^{p^k} a pi,

i.e. c_{b0} = w pi^{A0} and c_{p^k} = a pi with
a = 1 + sum_j alpha_j pi^j (+ gamma pi^B when the break B is an integer).
The reduction replaces pi_L by pi_L + r pi_L^{l+1} for l = 1, 2, ... with a
residue r chosen so that the new minimum polynomial agrees with a standard
form one step further (in the l-equivalence sense).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .eisenstein import EisensteinPoly, ab_decompose, indices, l_equiv, phi_j, v_p
from .errors import (HypothesisFailed, PostconditionFailed, PrecisionExhausted,
                     ThreeIndexInput, NotTwoIndex, ExcludedCase, ZeroOmega)
from .ext_arith import minpoly_uniformizer
from .local_field import INF, KElem, teich_lift
from .residue_field import RFElem, coset_reps, rf_pk_root


# --- standard forms ------------------------------------------------------------

def alpha_range(pk, i0):
    """Indices j that carry a digit alpha_j, and whether gamma is present."""
    B = Fraction(i0, pk - 1)
    if B.denominator == 1:
        return list(range(1, int(B))), True
    return list(range(1, int(B) + 1)), False


@dataclass(frozen=True)
class StandardForm:
    """Data (k, A0, b0, omega, alpha_j, gamma) of a three-term polynomial.

    ``alphas`` is a tuple of (j, RFElem) over every free index j (forced
    zeros at j = b0 mod p^k are left out); ``gamma`` is None unless the break
    is an integer.
    """

    field: object
    k: int
    A0: int
    b0: int
    omega: RFElem
    alphas: tuple = ()
    gamma: object = None

    @property
    def pk(self):
        return self.field.p ** self.k

    @property
    def i0(self):
        return self.pk * self.A0 - self.b0

    @property
    def B(self):
        return Fraction(self.i0, self.pk - 1)

    def validate(self):
        K = self.field
        if self.k < 1:
            raise ExcludedCase("k must be positive")
        if not 1 <= self.b0 <= self.pk:
            raise ExcludedCase("b0 must lie in 1..p^k")
        if self.b0 % K.p == 0:
            raise ExcludedCase("p divides b0")
        if not 1 <= self.A0 <= K.e_K:
            raise ExcludedCase("A0 must lie in 1..e_K")
        if self.omega.is_zero():
            raise ZeroOmega("omega must be nonzero")
        js, has_gamma = alpha_range(self.pk, self.i0)
        free = [j for j in js if (j - self.b0) % self.pk]
        if [j for j, _ in self.alphas] != free:
            raise ExcludedCase(f"alpha indices must be exactly {free}")
        if has_gamma != (self.gamma is not None):
            raise ExcludedCase("gamma is present exactly when the break is an integer")
        if has_gamma:
            reps = coset_reps(self.k, self.A0, self.b0, self.omega).coset_reps
            if self.gamma not in reps:
                raise ExcludedCase("gamma is not one of the chosen coset representatives")
        return self

    def a_value(self):
        """a = 1 + sum alpha_j pi^j (+ gamma pi^B) as a K element."""
        K = self.field
        a = K.one()
        for j, al in self.alphas:
            if not al.is_zero():
                a = a + teich_lift(al, K).shift(j)
        if self.gamma is not None and not self.gamma.is_zero():
            a = a + teich_lift(self.gamma, K).shift(int(self.B))
        return a

    def render(self):
        """The three-term Eisenstein polynomial."""
        K = self.field
        coeffs = {self.b0: teich_lift(self.omega, K).shift(self.A0),
                  self.pk: self.a_value().shift(1)}
        return EisensteinPoly(K, self.pk, coeffs)

    def key(self):
        return (self.k, self.A0, self.b0, self.omega.code,
                tuple((j, a.code) for j, a in self.alphas),
                None if self.gamma is None else self.gamma.code)

    def to_json(self):
        return {
            "k": self.k, "A0": self.A0, "b0": self.b0,
            "omega": self.omega.literal(),
            "alphas": {str(j): a.literal() for j, a in self.alphas},
            "gamma": None if self.gamma is None else self.gamma.literal(),
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, K, doc):
        F = K.residue
        alphas = tuple(sorted((int(j), F.parse(v)) for j, v in doc.get("alphas", {}).items()))
        gamma = doc.get("gamma")
        sf = cls(K, int(doc["k"]), int(doc["A0"]), int(doc["b0"]), F.parse(doc["omega"]),
                 alphas, None if gamma is None else F.parse(gamma))
        return sf.validate()

    def __eq__(self, other):
        return (isinstance(other, StandardForm) and self.field == other.field
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())


@dataclass
class Approximant:
    """Partially determined standard form: digits fixed so far."""

    k: int
    A0: int
    b0: int
    omega: RFElem
    digits: dict = field(default_factory=dict)   # j -> RFElem, for alphas and gamma
    field_: object = None

    def standard_form(self):
        pk = self.field_.p ** self.k
        i0 = pk * self.A0 - self.b0
        js, has_gamma = alpha_range(pk, i0)
        F = self.field_.residue
        alphas = tuple((j, self.digits.get(j, F.zero)) for j in js if (j - self.b0) % pk)
        gamma = self.digits.get(int(Fraction(i0, pk - 1)), F.zero) if has_gamma else None
        return StandardForm(self.field_, self.k, self.A0, self.b0, self.omega, alphas, gamma)

    def render(self):
        return self.standard_form().render()


# --- perturbation predictions --------------------------------------------------

@dataclass(frozen=True)
class Prediction:
    """c~_h is congruent to ``value`` mod pi^(t+1)."""

    h: int
    t: int
    S: tuple
    g: dict
    value: KElem


def _as_K(r, K):
    if isinstance(r, RFElem):
        return teich_lift(r, K)
    return K(r)


def perturb_predict(f, ell, r, j, profile=None):
    """Coefficient of the minimum polynomial of pi_L + r pi_L^(ell+1).

    Valid when min(v_p(phi_j(ell)), k) = j; returns the index h it
    concerns, the exponent t and the class of c~_h modulo pi^(t+1).
    """
    if profile is None:
        profile = indices(f)
    K, n, p, k, u = f.field, f.n, f.field.p, profile.k, profile.u
    if not 0 <= j <= k or ell < 1:
        raise HypothesisFailed(j, ell)
    phi = phi_j(profile, j, ell)
    if phi == INF or phi.denominator != 1 or min(v_p(int(phi), p), k) != j:
        raise HypothesisFailed(j, ell)
    phi = int(phi)
    h = (-phi) % n or n
    t = (phi + h) // n
    h0 = h // p ** j
    r = _as_K(r, K)
    S, g = [], {}
    value = f.coeff(h).truncate(t + 1)
    for m in range(j + 1):
        im = profile.idx[m]
        if im == INF or im + p ** m * ell != phi:
            continue
        S.append(m)
        Am, bm = ab_decompose(im, n)
        sign = (-1) ** (t + ell + Am)
        if bm < h:
            gm = sign * (h0 * p ** (j - m) + ell - u * p ** (k - m))
        elif bm < n:
            gm = sign * (h0 * p ** (j - m) + ell)
        else:
            gm = sign * u * p ** (k - m)
        g[m] = gm
        term = (f.coeff(n) ** (t - Am)) * f.coeff(bm) * r ** (p ** m) * gm
        value = value + term.truncate(t + 1)
    return Prediction(h, t, tuple(S), g, value.truncate(t + 1))


def predict_two_index(f, ell, r, profile=None, branch=None):
    """The two-index specialization of :func:`perturb_predict` (n = p^k).

    ``branch`` is "below" (ell < B, constant term), "at" (ell = B, constant
    term) or "off" (ell > B or ell not congruent to b0 mod p^k); by default
    the first applicable one is used.
    """
    if profile is None:
        profile = indices(f)
    if not profile.two_index:
        raise NotTwoIndex("two distinct indices required")
    K, pk, A0, b0, B = f.field, profile.pk, profile.A0, profile.b0, profile.B
    i0 = profile.i0
    if branch is None:
        branch = "below" if ell < B else "at" if ell == B else "off"
    ok = {"below": ell < B, "at": ell == B,
          "off": ell > B or (ell - b0) % pk != 0}.get(branch)
    if not ok:
        raise HypothesisFailed(profile.k, ell)
    r = _as_K(r, K)
    c, cb = f.coeff(pk), f.coeff(b0)
    if branch == "below":
        t = ell + 1
        val = c + c ** (ell + 1) * r ** pk
        return Prediction(pk, t, (profile.k,), {profile.k: 1}, val.truncate(t + 1))
    if branch == "at":
        t = ell + 1
        s = (-1) ** (A0 + 1) * b0
        val = c + c ** (ell + 1 - A0) * cb * r * s + c ** (ell + 1) * r ** pk
        return Prediction(pk, t, (0, profile.k), {0: s, profile.k: 1}, val.truncate(t + 1))
    h = (-(i0 + ell)) % pk or pk
    t = (i0 + ell + h) // pk
    s = (-1) ** (t + ell + A0) * b0
    val = f.coeff(h) + c ** (t - A0) * cb * r * s
    return Prediction(h, t, (0,), {0: s}, val.truncate(t + 1))


# --- reduction -------------------------------------------------------------------

@dataclass
class TraceStep:
    ell: int
    case: str
    r: RFElem
    h: int

    def to_json(self):
        return {"ell": self.ell, "case": self.case, "r": self.r.literal(), "h": self.h}


@dataclass
class ReductionTrace:
    xi: RFElem = None
    steps: list = field(default_factory=list)
    ell_reached: int = 0

    def to_json(self):
        return {"xi": None if self.xi is None else self.xi.literal(),
                "ell_reached": self.ell_reached,
                "steps": [s.to_json() for s in self.steps]}


def _two_index_profile(f):
    prof = indices(f)
    if prof.u != 1 or prof.k < 1:
        raise NotTwoIndex("degree must be a power of p")
    if prof.distinct_count > 2:
        raise ThreeIndexInput(f"{prof.distinct_count} distinct indices {prof.idx}")
    if not prof.two_index:
        raise NotTwoIndex(f"indices {prof.idx} are not of two-index type")
    if prof.k < 2:
        raise NotTwoIndex("degree p extensions (k = 1) are not covered")
    return prof


def normalize_constant(f):
    """Scale pi_L by a Teichmueller unit so that c_{p^k} = pi mod pi^2."""
    _two_index_profile(f)
    K, n = f.field, f.n
    beta = f.coeff(n).unshift(1).residue()
    xi = rf_pk_root(beta, f.k)
    if xi == K.residue.one:
        return xi, f
    inv = teich_lift(xi.inverse(), K)
    coeffs = {h: c * inv ** h for h, c in f.coeffs.items()}
    return xi, EisensteinPoly(K, n, coeffs)


def one_standard(f, profile=None):
    """Three-term polynomial 1-equivalent to a normalized f, with its omega."""
    if profile is None:
        profile = _two_index_profile(f)
    K = f.field
    omega = f.coeff(profile.b0).unshift(profile.A0).residue()
    approx = Approximant(profile.k, profile.A0, profile.b0, omega, {}, K)
    g = approx.render()
    if not l_equiv(f, g, 1, profile):
        raise PostconditionFailed("normalized polynomial is not 1-equivalent to its three-term model")
    return g, approx


def rho_max(i0, pk, ell):
    return ceil(Fraction(i0 + ell + pk, pk)) + 1


def _digit_at(x, e):
    """Residue of x / pi^e, for x of valuation >= e."""
    v = x.val()
    if isinstance(v, int) and v < e:
        raise PostconditionFailed(f"expected valuation >= {e}, found {v}")
    return x.unshift(e).residue()


def reduce_step(f, ell, approx, profile):
    """One perturbation: returns (r, f~, approximant, trace step)."""
    K = f.field
    F = K.residue
    pk, A0, b0, B, i0 = profile.pk, profile.A0, profile.b0, profile.B, profile.i0
    omega = approx.omega
    b0w_inv = (F(b0) * omega).inverse()
    digits = dict(approx.digits)
    a_pi = approx.standard_form().a_value().shift(1)
    if (ell - b0) % pk:
        case = "Case1"
        h = (b0 - ell) % pk
        t = (i0 + ell + h) // pk
        target = f.coeff(h)
        if h == b0:
            target = target - teich_lift(omega, K).shift(A0)
        alpha = _digit_at(target, t)
        r = F((-1) ** (t + ell + A0 + 1)) * alpha * b0w_inv
    elif ell < B:
        case, h = "Case2-below", pk
        alpha = _digit_at(f.coeff(pk) - a_pi, ell + 1)
        r = rf_pk_root(-alpha, profile.k)
    elif ell == B:
        case, h = "Case2-at", pk
        alpha = _digit_at(f.coeff(pk) - a_pi, ell + 1)
        psi = coset_reps(profile.k, A0, b0, omega)
        gamma = psi.representative(alpha)
        r = psi.solve(gamma - alpha)
        digits[ell] = gamma
    else:
        case, h = "Case2-above", pk
        t = (i0 + ell + pk) // pk
        alpha = _digit_at(f.coeff(pk) - a_pi, t)
        r = F((-1) ** (t + ell + A0 + 1)) * alpha * b0w_inv

    if r.is_zero():
        ft = f
    else:
        expr = {1: K.one(), ell + 1: teich_lift(r, K)}
        ft = minpoly_uniformizer(f, expr)
        if not l_equiv(f, ft, ell, profile):
            raise PostconditionFailed(f"stability failed at ell={ell}")

    if case == "Case1" and ell < B:
        digits[ell] = _digit_at(ft.coeff(pk) - a_pi, ell + 1)
    new = Approximant(approx.k, A0, b0, omega, digits, K)
    if not l_equiv(ft, new.render(), ell + 1, profile):
        raise PostconditionFailed(f"result of step ell={ell} is not {ell + 1}-standard ({case})")
    return r, ft, new, TraceStep(ell, case, r, h)


def default_ell_max(profile):
    return profile.pk * (int(profile.B) + 2)


def reduce_to_standard(f, ell_max=None):
    """Standard form of the extension generated by a root of f.

    Returns (StandardForm, ReductionTrace); the result is certified to be
    (ell_max + 1)-equivalent to the minimum polynomial of a uniformizer of
    the same extension.
    """
    profile = _two_index_profile(f)
    if ell_max is None:
        ell_max = default_ell_max(profile)
    if ell_max < int(profile.B) + 1:
        raise ValueError(f"ell_max must be at least {int(profile.B) + 1} to fix every digit")
    xi, f = normalize_constant(f)
    trace = ReductionTrace(xi=xi)
    _, approx = one_standard(f, profile)
    N = f.field.N
    for ell in range(1, ell_max + 1):
        if N < rho_max(profile.i0, profile.pk, ell) + 2:
            raise PrecisionExhausted(ell - 1, f"precision {N} is too small for step {ell}")
        _, f, approx, step = reduce_step(f, ell, approx, profile)
        trace.steps.append(step)
        trace.ell_reached = ell
    return approx.standard_form(), trace


def required_precision(profile, ell_max=None):
    if ell_max is None:
        ell_max = default_ell_max(profile)
    return rho_max(profile.i0, profile.pk, ell_max) + 2

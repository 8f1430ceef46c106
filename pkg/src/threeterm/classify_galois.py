"""Enumeration of standard forms and the Galois criterion.

For fixed K, k and i0 the standard forms are in bijection with the
isomorphism classes of degree-p^k extensions with indices (i0, ..., i0, 0),
so listing them classifies those extensions.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .eisenstein import ab_decompose
from .errors import CapExceeded, ExcludedCase
from .reduce import StandardForm, alpha_range
from .residue_field import coset_reps, rf_is_nth_power

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class ClassificationRequest:
    field: object
    k: int
    i0: int
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.k < 2:
            raise ExcludedCase("k must be at least 2")
        if self.i0 < 1:
            raise ExcludedCase("i0 must be positive")
        if self.b0 % self.field.p == 0:
            raise ExcludedCase(f"p divides b0 = {self.b0}; such extensions have three indices")
        if self.A0 > self.field.e_K:
            raise ExcludedCase(f"A0 = {self.A0} exceeds e_K; such extensions have three indices")

    @property
    def pk(self):
        return self.field.p ** self.k

    @property
    def A0(self):
        return ab_decompose(self.i0, self.pk)[0]

    @property
    def b0(self):
        return ab_decompose(self.i0, self.pk)[1]

    @property
    def B(self):
        return Fraction(self.i0, self.pk - 1)

    def free_indices(self):
        js, has_gamma = alpha_range(self.pk, self.i0)
        return [j for j in js if (j - self.b0) % self.pk], has_gamma


def _reps(req, omega):
    return coset_reps(req.k, req.A0, req.b0, omega).coset_reps


def count_standard_forms(req):
    """Closed-form count: sum over omega of q^(#free j) * |T| (|T| only when B is integral)."""
    F = req.field.residue
    free, has_gamma = req.free_indices()
    per_omega = F.q ** len(free)
    if not has_gamma:
        return (F.q - 1) * per_omega
    return sum(per_omega * len(_reps(req, w)) for w in F.nonzero())


def _forms_for_omega(req, omega):
    F = req.field.residue
    free, has_gamma = req.free_indices()
    gammas = _reps(req, omega) if has_gamma else [None]
    for digits in itertools.product(F.elements(), repeat=len(free)):
        alphas = tuple(zip(free, digits))
        for gamma in gammas:
            yield StandardForm(req.field, req.k, req.A0, req.b0, omega, alphas, gamma)


def enumerate_standard_forms(req, omegas=None):
    """All standard forms in a fixed order: omega, then alpha digits, then gamma."""
    total = count_standard_forms(req)
    if total > req.cap:
        raise CapExceeded(f"{total} forms exceed the cap of {req.cap}")
    for omega in (req.field.residue.nonzero() if omegas is None else omegas):
        yield from _forms_for_omega(req, omega)


# --- Galois criterion ------------------------------------------------------------

def _radicand_parts(sf):
    """(unit residue, pi exponent) of (-1)^{b0} b0 omega pi^{p^k - b0 + A0 - 1}."""
    F = sf.field.residue
    unit = F((-1) ** sf.b0 * sf.b0) * sf.omega
    return unit, sf.pk - sf.b0 + sf.A0 - 1


@dataclass(frozen=True)
class GaloisVerdict:
    galois: bool
    group: object          # e.g. "(Z/3Z)^2" when Galois
    roots_of_unity: bool   # zeta_{p^k-1} lies in K
    radicand_power: bool   # the radicand is a (p^k-1)-th power in K

    def to_json(self):
        return {"galois": self.galois, "group": self.group,
                "roots_of_unity_in_K": self.roots_of_unity,
                "radicand_is_power": self.radicand_power}


def is_galois(sf):
    """Whether the extension of a standard form is Galois over K."""
    m = sf.pk - 1
    q = sf.field.q
    unit, s = _radicand_parts(sf)
    zeta = (q - 1) % m == 0
    power = s % m == 0 and rf_is_nth_power(unit, m)
    ok = zeta and power
    group = f"(Z/{sf.field.p}Z)^{sf.k}" if ok else None
    return GaloisVerdict(ok, group, zeta, power)


def _mult_order(a, m):
    if m == 1:
        return 1
    e, x = 1, a % m
    while x != 1:
        x = x * a % m
        e += 1
    return e


def _elem_order(u):
    F = u.owner
    one = F.one
    for e in sorted(_divisors(F.q - 1)):
        if u ** e == one:
            return e
    raise AssertionError("unreachable")  # pragma: no cover


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class SplittingFieldDescr:
    """K(pi_L, zeta_m, m-th root of the radicand) with m = p^k - 1.

    ``radicand`` is written ``c*[w]*pi^s`` with [w] the Teichmueller lift of
    the residue w; its residue unit part is ``radicand_unit``.
    """

    root_order: int
    radicand_unit: object
    radicand_exponent: int
    radicand: object
    unramified_degree: int
    kummer_degree: int

    @property
    def tame_degree(self):
        return self.unramified_degree * self.kummer_degree

    @property
    def degree(self):
        return (self.root_order + 1) * self.tame_degree

    def describe(self):
        m = self.root_order
        return (f"K(pi_L, zeta_{m}, ({self.radicand_unit.literal()})^(1/{m}) * pi^({self.radicand_exponent}/{m}))")

    def to_json(self):
        return {
            "description": self.describe(),
            "root_of_unity_order": self.root_order,
            "radical_degree": self.root_order,
            "radicand": self.radicand,
            "radicand_unit": self.radicand_unit.literal(),
            "radicand_pi_exponent": self.radicand_exponent,
            "unramified_degree": self.unramified_degree,
            "kummer_degree": self.kummer_degree,
            "tame_degree": self.tame_degree,
            "degree": self.degree,
        }


def splitting_field(sf):
    """Describe the splitting field of the standard form's polynomial."""
    K = sf.field
    m = sf.pk - 1
    unit, s = _radicand_parts(sf)
    f0 = _mult_order(K.q, m)
    Q = K.q ** f0
    o = _elem_order(unit)
    kummer = _lcm(m // gcd(m, s), o // gcd(o, (Q - 1) // m))
    radicand = f"{(-1) ** sf.b0 * sf.b0}*[{sf.omega.literal()}]*pi^{s}"
    return SplittingFieldDescr(m, unit, s, radicand, f0, kummer)

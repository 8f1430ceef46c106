"""Eisenstein polynomials and their indices of inseparability.

Polynomials use the alternating sign convention

    f(X) = X^n - c_1 X^{n-1} + c_2 X^{n-2} - ... + (-1)^n c_n,

so ``coeffs[h]`` is c_h.  A coefficient absent from ``coeffs`` is exactly
zero; a present coefficient whose digits are all zero is only known to have
valuation at least its precision.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import InsufficientPrecision, MixedFields, NotEisenstein, NotTwoIndex
from .local_field import INF, BelowPrecision, KElem, LocalField, ext_str


def v_p(n, p):
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def split_degree(n, p):
    """(u, k) with n = u * p^k and p not dividing u."""
    k = v_p(n, p)
    return n // p ** k, k


def ab_decompose(i, n):
    """(A, b) with i = A*n - b and 1 <= b <= n."""
    A = i // n + 1
    return A, A * n - i


class EisensteinPoly:
    """Monic degree-n Eisenstein polynomial over a LocalField."""

    def __init__(self, field, n, coeffs, check=True):
        self.field = field
        self.n = n
        self.coeffs = {int(h): c for h, c in coeffs.items() if c is not None}
        self.u, self.k = split_degree(n, field.p)
        if check:
            self._validate()

    def _validate(self):
        n, K = self.n, self.field
        if n < 1:
            raise NotEisenstein(0, "degree must be positive")
        for h, c in self.coeffs.items():
            if not 1 <= h <= n:
                raise NotEisenstein(h, "index outside 1..n")
            if not isinstance(c, KElem) or c.owner != K:
                raise MixedFields(f"c_{h} does not belong to the base field")
            if c.prec < 1:
                raise InsufficientPrecision(h, 1)
            if not c.truncate(1).is_zero():
                raise NotEisenstein(h, "coefficient is a unit")
        cn = self.coeffs.get(n)
        if cn is None:
            raise NotEisenstein(n, "constant term is zero")
        if cn.prec < 2:
            raise InsufficientPrecision(n, 2)
        if cn.val() != 1:
            raise NotEisenstein(n, "constant term does not have valuation 1")

    def coeff(self, h):
        c = self.coeffs.get(h)
        return self.field.zero() if c is None else c

    def is_exact_zero(self, h):
        return h not in self.coeffs

    @property
    def prec(self):
        return min((c.prec for c in self.coeffs.values()), default=self.field.N)

    def nonzero_terms(self):
        """Number of nonzero monomials, counting X^n."""
        return 1 + sum(1 for c in self.coeffs.values() if not c.is_zero())

    def monomial_coefficients(self):
        """Coefficient of X^{n-h} (with the sign applied) for h = 0..n."""
        out = [self.field.one()]
        for h in range(1, self.n + 1):
            c = self.coeff(h)
            out.append(c if h % 2 == 0 else -c)
        return out

    def equal_coefficients(self, other, prec=None):
        """Coefficientwise equality at the common (or given) precision."""
        if self.n != other.n:
            return False
        for h in range(1, self.n + 1):
            a, b = self.coeff(h), other.coeff(h)
            if prec is not None:
                a, b = a.truncate(prec), b.truncate(prec)
            if a != b:
                return False
        return True

    def __repr__(self):
        terms = ", ".join(f"c_{h}={c.literal()}" for h, c in sorted(self.coeffs.items()))
        return f"EisensteinPoly(n={self.n}, {terms})"


def eis_validate(field, n, coeffs):
    return EisensteinPoly(field, n, coeffs)


# --- indices -----------------------------------------------------------------

def _tilde_bounds(f):
    """Per j: (certified minimum, smallest lower bound among unresolved terms)."""
    n, p = f.n, f.field.p
    out = []
    for j in range(f.k + 1):
        best, lb, lb_h = INF, INF, None
        for h, c in f.coeffs.items():
            if v_p(h, p) > j:
                continue
            v = c.val()
            if isinstance(v, BelowPrecision):
                bound = n * v.prec - h
                if bound < lb:
                    lb, lb_h = bound, h
            else:
                best = min(best, n * v - h)
        out.append((best, lb, lb_h))
    return out


def tilde_indices(f):
    """The polynomial-dependent quantities i~_0, ..., i~_k."""
    out = []
    for best, lb, h in _tilde_bounds(f):
        if lb < best:
            needed = None if best == INF else ceil((best + h) / f.n) + 1
            raise InsufficientPrecision(h, needed)
        out.append(best)
    return out


@dataclass(frozen=True)
class InsepProfile:
    """Indices of inseparability of an Eisenstein polynomial's extension.

    ``tilde`` holds i~_j where it is determined at the available precision
    and ``None`` where it is not (only the invariant ``idx`` is guaranteed).
    """

    n: int
    p: int
    k: int
    u: int
    e_K: object
    tilde: tuple
    idx: tuple
    distinct_count: int
    two_index: bool
    A0: object = None
    b0: object = None
    B: object = None

    @property
    def pk(self):
        return self.p ** self.k

    @property
    def i0(self):
        return self.idx[0]

    def to_json(self):
        out = {
            "n": self.n, "p": self.p, "k": self.k, "u": self.u,
            "e_K": ext_str(self.e_K),
            "tilde": [None if t is None else ext_str(t) for t in self.tilde],
            "indices": [ext_str(i) for i in self.idx],
            "distinct_count": self.distinct_count,
            "two_index": self.two_index,
        }
        if self.two_index:
            out.update(A0=self.A0, b0=self.b0,
                       break_num=self.B.numerator, break_den=self.B.denominator)
        return out


def indices(f):
    """Indices of inseparability i_0..i_k of the extension generated by f."""
    n, k, e_K = f.n, f.k, f.field.e_K
    bounds = _tilde_bounds(f)
    tilde = tuple(best if lb >= best else None for best, lb, _ in bounds)
    idx = []
    for j in range(k + 1):
        best, worst_lb, worst_h = INF, INF, None
        for jp in range(j, k + 1):
            if jp == j:
                off = 0
            elif e_K == INF:
                continue
            else:
                off = (jp - j) * n * e_K
            cert, lb, h = bounds[jp]
            best = min(best, cert + off)
            if lb + off < worst_lb:
                worst_lb, worst_h = lb + off, h
        if worst_lb < best:
            raise InsufficientPrecision(worst_h, None if best == INF else ceil((best + worst_h) / n) + 1)
        idx.append(best)
    idx = tuple(idx)
    distinct = len(set(idx))
    two = (distinct == 2 and f.u == 1 and k >= 1 and all(i != INF for i in idx))
    A0 = b0 = B = None
    if two:
        A0, b0 = ab_decompose(idx[0], n)
        B = Fraction(idx[0], n - 1)
    return InsepProfile(n=n, p=f.field.p, k=k, u=f.u, e_K=e_K, tilde=tilde, idx=idx,
                        distinct_count=distinct, two_index=two, A0=A0, b0=b0, B=B)


def ram_break(profile):
    """The unique ramification break i_0 / (p^k - 1)."""
    if not profile.two_index:
        raise NotTwoIndex("the break formula needs n = p^k with two distinct indices")
    return Fraction(profile.idx[0], profile.pk - 1)


def phi_j(profile, j, x):
    """Generalized Hasse-Herbrand function: min over j0 <= j of i_{j0} + p^{j0} x."""
    x = Fraction(x)
    vals = [profile.idx[j0] + profile.p ** j0 * x
            for j0 in range(j + 1) if profile.idx[j0] != INF]
    return min(vals) if vals else INF


def phi_LK(profile, x):
    return phi_j(profile, profile.k, x) / profile.n


def rho(profile, h, ell):
    j = min(v_p(h, profile.p), profile.k)
    phi = phi_j(profile, j, ell)
    return INF if phi == INF else ceil((phi + h) / profile.n)


def l_equiv(f, g, ell, profile=None):
    """Whether v_K(g_h - f_h) >= rho_h(ell) for all h, using f's profile."""
    if f.field != g.field:
        raise MixedFields("polynomials over different fields")
    if f.n != g.n:
        raise ValueError("polynomials of different degree")
    if profile is None:
        profile = indices(f)
    for h in range(1, f.n + 1):
        need = rho(profile, h, ell)
        if f.is_exact_zero(h) and g.is_exact_zero(h):
            continue
        a, b = f.coeff(h), g.coeff(h)
        prec = min(a.prec if not f.is_exact_zero(h) else INF,
                   b.prec if not g.is_exact_zero(h) else INF)
        if prec < need:
            raise InsufficientPrecision(h, need)
        if not (b.truncate(need) - a.truncate(need)).is_zero():
            return False
    return True

"""Arithmetic in L = K[X]/(f) for an Eisenstein polynomial f.

The minimum polynomial of a uniformizer g(pi_L) is the characteristic
polynomial of multiplication by g(pi_L) on the basis 1, pi_L, ...,
pi_L^{n-1}.  Coefficients live in O_K/pi^N, a ring with zero divisors, so the
characteristic polynomial is computed with Berkowitz's division-free
algorithm.
"""

from .eisenstein import EisensteinPoly
from .errors import MixedFields, NotEisenstein, NotEisensteinResult, NotUniformizer
from .literals import parse_poly
from .local_field import BelowPrecision, KElem


class LElem:
    """sum(coeffs[i] * pi_L^i) for 0 <= i < n."""

    __slots__ = ("f", "coeffs")

    def __init__(self, f, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) < f.n:
            coeffs += [f.field.zero()] * (f.n - len(coeffs))
        self.f = f
        self.coeffs = coeffs

    def __mul__(self, other):
        return l_mul(self, other)

    def __add__(self, other):
        _same_owner(self, other)
        return LElem(self.f, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        _same_owner(self, other)
        return LElem(self.f, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other):
        return (isinstance(other, LElem) and other.f is self.f
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    __hash__ = None

    def times_pi(self):
        """Multiply by pi_L: shift, then replace pi_L^n using f(pi_L) = 0."""
        f = self.f
        n = f.n
        top = self.coeffs[-1]
        out = [f.field.zero()] + self.coeffs[:-1]
        if not top.is_zero():
            for h in range(1, n + 1):
                if f.is_exact_zero(h):
                    continue
                term = top * f.coeffs[h]
                # pi_L^n = sum_h (-1)^(h+1) c_h pi_L^(n-h)
                out[n - h] = out[n - h] + term if h % 2 else out[n - h] - term
        else:
            out = [c.truncate(top.prec) if c.prec > top.prec else c for c in out]
        return LElem(f, out)

    def val(self):
        """v_L = min_i (n v_K(a_i) + i), certified against precision."""
        n = self.f.n
        best, unsure = None, None
        for i, a in enumerate(self.coeffs):
            v = a.val()
            if isinstance(v, BelowPrecision):
                bound = n * v.prec + i
                unsure = bound if unsure is None else min(unsure, bound)
            else:
                cand = n * v + i
                best = cand if best is None else min(best, cand)
        if best is None or (unsure is not None and unsure < best):
            return BelowPrecision(unsure)
        return best


def _same_owner(a, b):
    if a.f is not b.f:
        raise MixedFields("elements of different extensions")


def pi_L(f):
    K = f.field
    return LElem(f, [K.zero(), K.one()])


def l_from_poly(f, expr):
    """Evaluate g(pi_L) for expr given as {power: KElem}, a literal or an LElem."""
    if isinstance(expr, LElem):
        return expr
    K = f.field
    if isinstance(expr, str):
        expr = parse_expr(K, expr)
    acc = [K.zero() for _ in range(f.n)]
    acc = LElem(f, acc)
    power = LElem(f, [K.one()])
    for e in range(max(expr, default=0) + 1):
        c = expr.get(e)
        if c is not None:
            acc = acc + LElem(f, [c * x for x in power.coeffs])
        power = power.times_pi()
    return acc


def parse_expr(K, text):
    """Parse a polynomial in X with K-literal coefficients into {power: KElem}."""
    names = ["X", "g", "pi"] if K.mixed else ["X", "g", "pi", "t"]
    poly = parse_poly(text, names)
    grouped = {}
    for mono, c in poly.items():
        factors = [str(c)] + [f"{v}^{e}" for v, e in zip(names[1:], mono[1:]) if e]
        grouped.setdefault(mono[0], []).append("*".join(factors))
    return {e: K.parse(" + ".join(parts)) for e, parts in grouped.items()}


def l_mul(a, b):
    _same_owner(a, b)
    acc = LElem(a.f, [])
    power = b
    for c in a.coeffs:
        if not c.is_zero():
            acc = acc + LElem(a.f, [c * x for x in power.coeffs])
        power = power.times_pi()
    return acc


def mul_matrix(alpha):
    """Matrix (rows) of multiplication by alpha on 1, pi_L, ..., pi_L^{n-1}."""
    n = alpha.f.n
    cols = [alpha]
    for _ in range(n - 1):
        cols.append(cols[-1].times_pi())
    return [[cols[j].coeffs[i] for j in range(n)] for i in range(n)]


def charpoly(m):
    """Coefficients [1, a_1, ..., a_n] of det(X I - m), division-free.

    Berkowitz: the characteristic polynomial of the trailing principal
    submatrix of size s+1 is a lower-triangular Toeplitz matrix (built from
    a_ii, R C, R S C, R S^2 C, ...) applied to that of size s.
    """
    n = len(m)
    if n == 0:
        return []
    K = m[0][0].owner
    P = min(x.prec for row in m for x in row)
    R = K.ring(P)
    A = [[R.enc(x.truncate(P).raw) for x in row] for row in m]
    one = R.enc(R.one)
    neg_one = R.enc(R.neg(R.one))
    poly = [one]
    for i in range(n - 1, -1, -1):
        size = n - i - 1
        row = A[i][i + 1:]
        sub = [r[i + 1:] for r in A[i + 1:]]
        t = [one, R.fdot([neg_one], [A[i][i]])]
        vec = [A[r][i] for r in range(i + 1, n)]
        for step in range(size):
            t.append(R.fdot([neg_one], [R.fdot(row, vec)]))
            if step + 1 < size:
                vec = [R.fdot(r, vec) for r in sub]
        new = []
        for r in range(size + 2):
            lo, hi = max(0, r - (len(t) - 1)), min(r, size)
            new.append(R.fdot([t[r - j] for j in range(lo, hi + 1)], poly[lo:hi + 1]))
        poly = new
    return [KElem(K, R.dec(c), P) for c in poly]


def norm(alpha):
    """N_{L/K}(alpha) as the determinant of its multiplication matrix."""
    cp = charpoly(mul_matrix(alpha))
    n = alpha.f.n
    return cp[-1] if n % 2 == 0 else -cp[-1]


def minpoly_uniformizer(f, expr):
    """Minimum polynomial over K of the uniformizer g(pi_L)."""
    alpha = l_from_poly(f, expr)
    v = alpha.val()
    if v != 1:
        raise NotUniformizer(f"v_L of the expression is {v}, not 1")
    cp = charpoly(mul_matrix(alpha))
    coeffs = {h: (cp[h] if h % 2 == 0 else -cp[h]) for h in range(1, f.n + 1)}
    try:
        return EisensteinPoly(f.field, f.n, coeffs)
    except NotEisenstein as exc:
        raise NotEisensteinResult(f"characteristic polynomial is not Eisenstein: {exc}") from exc

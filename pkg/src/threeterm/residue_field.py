"""Finite fields F_{p^d} and the additive maps x -> x^{p^k} - c*x on them.

Elements are coefficient vectors on the basis 1, g, ..., g^(d-1) where g is a
root of a monic irreducible modulus.  Internally every element also has an
integer code ``sum(c_i * p**i)`` which indexes the lookup tables used by the
equal-characteristic series arithmetic.
"""

import itertools
from math import gcd

from .errors import NotPrime, ReducibleModulus, ZeroOmega
from .literals import format_univariate, parse_poly

_TABLE_LIMIT = 256


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- dense polynomials over Z/p, lists low degree first -------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        b = [x * inv % p for x in b]
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), m, p)
    return result


def is_irreducible(modulus, p):
    """Ben-Or test: no factor of degree i divides x^(p^i) - x for i <= d/2."""
    d = len(modulus) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    xp = [0, 1]
    for i in range(1, d // 2 + 1):
        xp = _ppowmod(xp, p, modulus, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(modulus, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


class ResidueField:
    """The finite field F_{p^d} = F_p[g]/(modulus)."""

    def __init__(self, p, d, modulus):
        self.p = p
        self.d = d
        self.modulus = tuple(modulus)
        self.q = p ** d
        self._tables = None
        self.zero = RFElem(self, (0,) * d)
        self.one = RFElem(self, (1,) + (0,) * (d - 1))

    def __repr__(self):
        return f"ResidueField(p={self.p}, d={self.d}, modulus={self.modulus_literal()!r})"

    def __eq__(self, other):
        return (isinstance(other, ResidueField) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def modulus_literal(self):
        return format_univariate(self.modulus, "g")

    def spec(self):
        return {"p": self.p, "d": self.d, "modulus": self.modulus_literal()}

    # -- construction of elements -------------------------------------------

    def __call__(self, value):
        """Coerce an int, coefficient sequence, literal string or RFElem."""
        if isinstance(value, RFElem):
            if value.owner != self:
                raise ValueError("element of a different residue field")
            return value
        if isinstance(value, int):
            return RFElem(self, (value % self.p,) + (0,) * (self.d - 1))
        if isinstance(value, str):
            return self.parse(value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            coeffs = _pmod(coeffs, self.modulus, self.p)
        return RFElem(self, tuple(coeffs) + (0,) * (self.d - len(coeffs)))

    def parse(self, text):
        poly = parse_poly(text, ["g"])
        deg = max((m[0] for m in poly), default=0)
        coeffs = [0] * (deg + 1)
        for (e,), c in poly.items():
            coeffs[e] = c
        return self(coeffs)

    def gen(self):
        return self([0, 1])

    def from_code(self, code):
        out = []
        for _ in range(self.d):
            code, c = divmod(code, self.p)
            out.append(c)
        return RFElem(self, tuple(out))

    def elements(self):
        """All q elements in lexicographic coefficient order (c_0 first)."""
        for coeffs in itertools.product(range(self.p), repeat=self.d):
            yield RFElem(self, coeffs)

    def nonzero(self):
        it = self.elements()
        next(it)
        return it

    # -- code-level arithmetic used by series rings --------------------------

    def tables(self):
        """(add, mul, neg) lookup tables on codes, built lazily for small q."""
        if self._tables is None:
            elems = [self.from_code(c) for c in range(self.q)]
            add = [[(a + b).code for b in elems] for a in elems]
            mul = [[(a * b).code for b in elems] for a in elems]
            neg = [(-a).code for a in elems]
            self._tables = (add, mul, neg)
        return self._tables

    def small(self):
        return self.q <= _TABLE_LIMIT

    # -- additive-map analysis ----------------------------------------------

    def frobenius_matrix(self, k, c):
        """Matrix (list of columns) of x -> x^{p^k} - c*x on the basis g^i."""
        cols = []
        for i in range(self.d):
            basis = RFElem(self, tuple(int(j == i) for j in range(self.d)))
            cols.append(list((basis ** (self.p ** k) - c * basis).coeffs))
        return cols


class RFElem:
    """Element of a ResidueField; immutable."""

    __slots__ = ("owner", "coeffs")

    def __init__(self, owner, coeffs):
        self.owner = owner
        self.coeffs = coeffs

    @property
    def code(self):
        p = self.owner.p
        c = 0
        for x in reversed(self.coeffs):
            c = c * p + x
        return c

    def _wrap(self, coeffs):
        return RFElem(self.owner, tuple(coeffs))

    def _other(self, other):
        if isinstance(other, RFElem):
            if other.owner is not self.owner and other.owner != self.owner:
                raise ValueError("mixed residue fields")
            return other
        if isinstance(other, int):
            return self.owner(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.owner.p
        return self._wrap((a + b) % p for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        p = self.owner.p
        return self._wrap((-a) % p for a in self.coeffs)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.owner
        prod = _pmod(_pmul(list(self.coeffs), list(other.coeffs), F.p), F.modulus, F.p)
        return self._wrap(prod + [0] * (F.d - len(prod)))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.owner.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in residue field")
        return self ** (self.owner.q - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.owner(other)
        if not isinstance(other, RFElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.owner == other.owner

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def frobenius(self, times=1):
        x = self
        for _ in range(times % self.owner.d if self.owner.d > 1 else 0):
            x = x ** self.owner.p
        return x

    def literal(self):
        return format_univariate(self.coeffs, "g")

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"RFElem({self.literal()!r})"


def rf_make(p, d=1, modulus=None):
    """Build F_{p^d}.

    Without a modulus the lexicographically smallest monic irreducible
    polynomial (coefficients compared low degree first) is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be >= 1")
    if modulus is None:
        for low in itertools.product(range(p), repeat=d):
            cand = list(low) + [1]
            if is_irreducible(cand, p):
                return ResidueField(p, d, cand)
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover
    if isinstance(modulus, str):
        poly = parse_poly(modulus, ["g"])
        deg = max((m[0] for m in poly), default=0)
        cand = [0] * (deg + 1)
        for (e,), c in poly.items():
            cand[e] = c % p
    else:
        cand = [int(c) % p for c in modulus]
    cand = _trim(cand)
    if len(cand) != d + 1 or cand[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {d}")
    if not is_irreducible(cand, p):
        raise ReducibleModulus(f"{format_univariate(cand, 'g')} is reducible mod {p}")
    return ResidueField(p, d, cand)


def rf_pk_root(a, k):
    """The unique x with x^{p^k} = a."""
    d = a.owner.d
    m = (d - (k % d)) % d
    return a.frobenius(m)


def rf_is_nth_power(a, n):
    if a.is_zero():
        return True
    q = a.owner.q
    return a ** ((q - 1) // gcd(n, q - 1)) == a.owner.one


def psi_coefficient(A0, b0, omega):
    """The residue (-1)^{A0} * b0 * omega appearing in psi-bar."""
    if omega.is_zero():
        raise ZeroOmega("omega must be nonzero")
    F = omega.owner
    return F((-1) ** A0 * b0) * omega


def psi_bar_eval(k, A0, b0, omega, x):
    """x^{p^k} - (-1)^{A0} * b0 * omega * x."""
    c = psi_coefficient(A0, b0, omega)
    return x ** (x.owner.p ** k) - c * x


def _echelon(rows, p):
    """Reduced row echelon basis (list of (pivot, row)) of the row span."""
    basis = []
    for row in rows:
        row = [x % p for x in row]
        for piv, b in basis:
            if row[piv]:
                f = row[piv]
                row = [(x - f * y) % p for x, y in zip(row, b)]
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, p)
        row = [x * inv % p for x in row]
        new_basis = []
        for piv, b in basis:
            if b[lead]:
                f = b[lead]
                b = [(x - f * y) % p for x, y in zip(b, row)]
            new_basis.append((piv, b))
        new_basis.append((lead, row))
        basis = sorted(new_basis)
    return basis


def _reduce_mod(vec, basis, p):
    vec = list(vec)
    for piv, b in basis:
        if vec[piv]:
            f = vec[piv]
            vec = [(x - f * y) % p for x, y in zip(vec, b)]
    return tuple(vec)


class AdditiveMapAnalysis:
    """Image and coset representatives of x -> x^{p^k} - (-1)^{A0} b0 omega x."""

    def __init__(self, k, A0, b0, omega):
        F = omega.owner
        self.params = (k, A0, b0, omega)
        self.field = F
        self.coefficient = psi_coefficient(A0, b0, omega)
        self.matrix = F.frobenius_matrix(k, self.coefficient)
        self._image = _echelon(self.matrix, F.p)
        self.rank = len(self._image)
        self.coset_reps = self._reps()

    def _reps(self):
        F = self.field
        if self.rank == F.d:
            return [F.zero]
        want = F.p ** (F.d - self.rank)
        seen = {}
        for x in F.elements():
            key = self.coset_key(x)
            if key not in seen:
                seen[key] = x
                if len(seen) == want:
                    break
        return list(seen.values())

    def coset_key(self, x):
        """Canonical label of the coset x + image."""
        return _reduce_mod(x.coeffs, self._image, self.field.p)

    def in_image(self, x):
        return not any(self.coset_key(x))

    def representative(self, x):
        """The chosen coset representative of x + image."""
        key = self.coset_key(x)
        for rep in self.coset_reps:
            if self.coset_key(rep) == key:
                return rep
        raise AssertionError("coset representative missing")  # pragma: no cover

    def apply(self, x):
        k = self.params[0]
        return x ** (self.field.p ** k) - self.coefficient * x

    def solve(self, target):
        """Some x with psi-bar(x) = target; exhaustive for q <= 81."""
        F = self.field
        if F.q <= 81:
            for x in F.elements():
                if self.apply(x) == target:
                    return x
            raise ValueError("target not in the image")
        return self._linear_solve(target)

    def _linear_solve(self, target):
        F = self.field
        p, d = F.p, F.d
        # augmented rows of M x = target, M given by columns
        rows = [[self.matrix[c][r] for c in range(d)] + [target.coeffs[r]] for r in range(d)]
        piv_cols = []
        r = 0
        for c in range(d):
            pr = next((i for i in range(r, d) if rows[i][c] % p), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = pow(rows[r][c], -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
            for i in range(d):
                if i != r and rows[i][c] % p:
                    f = rows[i][c]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
            piv_cols.append(c)
            r += 1
        if any(rows[i][d] % p for i in range(r, d)):
            raise ValueError("target not in the image")
        x = [0] * d
        for i, c in enumerate(piv_cols):
            x[c] = rows[i][d]
        return F(x)


def coset_reps(k, A0, b0, omega):
    return AdditiveMapAnalysis(k, A0, b0, omega)

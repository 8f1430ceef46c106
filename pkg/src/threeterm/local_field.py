"""Base fields K with a fixed absolute precision.

Two models are supported:

* ``mixed``: the unramified extension of Q_p with residue field F_q.  O_K/p^N
  is stored exactly as (Z/p^N)[g]/(modulus), so carries are handled by plain
  integer arithmetic.  The uniformizer is p and e_K = 1.
* ``equal``: F_q((t)).  Elements of O_K/t^N are tuples of N residue codes.
  The uniformizer is t and e_K is infinite.

Every element carries an absolute precision ``prec``: it is known modulo
pi^prec.  Binary operations return the minimum of the input precisions.
"""

import math
from functools import lru_cache

from .errors import BadSpec, MixedFields, NonUnitInverse
from .literals import parse_poly
from .residue_field import RFElem, ResidueField, rf_make

INF = math.inf


class BelowPrecision:
    """Valuation of an element whose stored digits are all zero."""

    __slots__ = ("prec",)

    def __init__(self, prec):
        self.prec = prec

    def __repr__(self):
        return f"BelowPrecision({self.prec})"

    def __eq__(self, other):
        return isinstance(other, BelowPrecision) and other.prec == self.prec

    def __hash__(self):
        return hash(("below", self.prec))


def ext_str(x):
    """JSON-friendly rendering of an extended integer."""
    return "inf" if x == INF else int(x)


# --- raw rings ------------------------------------------------------------

class _MixedRing:
    """(Z/p^P)[g]/(modulus) on tuples of d ints."""

    def __init__(self, p, d, modulus, P):
        self.p, self.d, self.P = p, d, P
        self.M = p ** P
        self.mod = modulus
        self.zero = (0,) * d
        self.one = (1 % self.M,) + (0,) * (d - 1)

    def from_int(self, n):
        return (n % self.M,) + (0,) * (self.d - 1)

    def add(self, a, b):
        M = self.M
        return tuple((x + y) % M for x, y in zip(a, b))

    def sub(self, a, b):
        M = self.M
        return tuple((x - y) % M for x, y in zip(a, b))

    def neg(self, a):
        M = self.M
        return tuple((-x) % M for x in a)

    def mul(self, a, b):
        d, M = self.d, self.M
        if d == 1:
            return ((a[0] * b[0]) % M,)
        if d == 2:
            a0, a1 = a
            b0, b1 = b
            m0, m1 = self.mod[0], self.mod[1]
            hi = a1 * b1
            return ((a0 * b0 - hi * m0) % M, (a0 * b1 + a1 * b0 - hi * m1) % M)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.mod
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                for j in range(d):
                    prod[i - d + j] -= c * mod[j]
        return tuple(x % M for x in prod[:d])

    # the "packed" interface used by dot-product heavy code; for d = 1 an
    # element is a plain integer, otherwise the tuple itself

    def enc(self, a):
        return a[0] if self.d == 1 else a

    def dec(self, x):
        return (x % self.M,) if self.d == 1 else x

    def fdot(self, xs, ys):
        if self.d == 1:
            acc = 0
            for x, y in zip(xs, ys):
                acc += x * y
            return acc % self.M
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def is_zero(self, a):
        return not any(a)

    def reduce(self, a):
        M = self.M
        return tuple(x % M for x in a)


class _EqualRing:
    """F_q[t]/(t^P) on tuples of P residue codes."""

    def __init__(self, F, P):
        self.F, self.P = F, P
        self.p = F.p
        self.zero = (0,) * P
        self.one = (1,) + (0,) * (P - 1) if P else ()
        self.prime = F.d == 1
        self.tadd = self.tneg = None
        if not self.prime and F.small():
            self.tadd, _, self.tneg = F.tables()
        self._setup_packing()

    def from_int(self, n):
        return ((n % self.p),) + (0,) * (self.P - 1) if self.P else ()

    def _cadd(self, x, y):
        if self.tadd is not None:
            return self.tadd[x][y]
        F = self.F
        return (F.from_code(x) + F.from_code(y)).code

    def _cneg(self, x):
        if self.tneg is not None:
            return self.tneg[x]
        return (-self.F.from_code(x)).code

    def add(self, a, b):
        if self.prime:
            p = self.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return tuple(self._cadd(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self.prime:
            p = self.p
            return tuple((-x) % p for x in a)
        return tuple(self._cneg(x) for x in a)

    def sub(self, a, b):
        if self.prime:
            p = self.p
            return tuple((x - y) % p for x, y in zip(a, b))
        return self.add(a, self.neg(b))

    # -- packed representation ---------------------------------------------
    # Kronecker substitution: a series becomes one integer with a slot of
    # ``width`` bytes per coefficient (per t-power and, for d > 1, per
    # g-power).  Slots are wide enough that a dot product of up to
    # ``DOT_MAX`` packed products never carries between slots.

    DOT_MAX = 64

    def _setup_packing(self):
        F, P = self.F, self.P
        d = F.d
        self.stride = 2 * d - 1
        bound = self.DOT_MAX * max(P, 1) * d * (self.p - 1) ** 2 + 1
        self.width = (bound.bit_length() + 7) // 8
        self.code_vec = [F.from_code(c).coeffs + (0,) * (d - 1) for c in range(F.q)]
        self.g_pow = [F([0] * e + [1]).coeffs for e in range(self.stride)]
        self.slots = P * (1 if self.prime else self.stride)
        self.mask = (1 << (8 * self.width * self.slots)) - 1

    def enc(self, a):
        """Packed integer for the series a."""
        w = self.width
        if self.prime:
            return int.from_bytes(b"".join(x.to_bytes(w, "little") for x in a), "little")
        vecs = self.code_vec
        return int.from_bytes(b"".join(x.to_bytes(w, "little") for c in a for x in vecs[c]),
                              "little")

    def dec(self, x):
        """Series from a packed integer whose slots may exceed p."""
        P, p, w = self.P, self.p, self.width
        raw = (x & self.mask).to_bytes(w * self.slots, "little")
        if self.prime:
            return tuple(int.from_bytes(raw[i * w:(i + 1) * w], "little") % p for i in range(P))
        F, stride, d, g_pow = self.F, self.stride, self.F.d, self.g_pow
        out = []
        for i in range(P):
            base = i * stride * w
            vec = [0] * d
            for e in range(stride):
                c = int.from_bytes(raw[base + e * w:base + (e + 1) * w], "little") % p
                if c:
                    if e < d:
                        vec[e] += c
                    else:
                        for m, y in enumerate(g_pow[e]):
                            vec[m] += c * y
            out.append(F(vec).code if any(vec) else 0)
        return tuple(out)

    def fdot(self, xs, ys):
        """Packed (reduced) sum of products of packed operands."""
        acc = 0
        for x, y in zip(xs, ys):
            acc += x * y
        return self.enc(self.dec(acc))

    def mul(self, a, b):
        P = self.P
        if self.prime:
            p = self.p
            out = [0] * P
            for i, x in enumerate(a):
                if x:
                    for j in range(P - i):
                        y = b[j]
                        if y:
                            out[i + j] += x * y
            return tuple(v % p for v in out)
        return self.dec(self.enc(a) * self.enc(b))

    def is_zero(self, a):
        return not any(a)

    def reduce(self, a):
        return tuple(a)


class LocalField:
    """Base field K: ``mixed`` (unramified over Q_p) or ``equal`` (F_q((t)))."""

    def __init__(self, model, residue, precision):
        if model not in ("mixed", "equal"):
            raise BadSpec(f"unknown model {model!r}")
        if not isinstance(residue, ResidueField):
            raise BadSpec("residue must be a ResidueField")
        if precision < 1:
            raise BadSpec("precision must be >= 1")
        self.model = model
        self.residue = residue
        self.N = precision
        self.e_K = 1 if model == "mixed" else INF
        self.p = residue.p
        self.q = residue.q
        self._teich = {}

    def __repr__(self):
        return (f"LocalField({self.model!r}, p={self.p}, d={self.residue.d}, "
                f"modulus={self.residue.modulus_literal()!r}, N={self.N})")

    def __eq__(self, other):
        return (isinstance(other, LocalField) and self.model == other.model
                and self.residue == other.residue and self.N == other.N)

    def __hash__(self):
        return hash((self.model, self.residue, self.N))

    @property
    def mixed(self):
        return self.model == "mixed"

    def spec(self):
        out = {"model": self.model}
        out.update(self.residue.spec())
        out["precision"] = self.N
        return out

    def with_precision(self, N):
        return LocalField(self.model, self.residue, N)

    def ring(self, P):
        return _ring(self, P)

    # -- element constructors ------------------------------------------------

    def _make(self, raw, prec):
        return KElem(self, raw, prec)

    def zero(self, prec=None):
        P = self.N if prec is None else prec
        return KElem(self, self.ring(P).zero, P)

    def one(self, prec=None):
        P = self.N if prec is None else prec
        return KElem(self, self.ring(P).one, P)

    def from_int(self, n, prec=None):
        P = self.N if prec is None else prec
        return KElem(self, self.ring(P).from_int(n), P)

    def uniformizer(self):
        return self.one().shift(1)

    def naive_lift(self, a, prec=None):
        """Lift of a residue element with digit 0 equal to ``a``."""
        P = self.N if prec is None else prec
        a = self.residue(a)
        if self.mixed:
            return KElem(self, tuple(a.coeffs), P)
        return KElem(self, (a.code,) + (0,) * (P - 1), P)

    def __call__(self, value):
        if isinstance(value, KElem):
            if value.owner != self:
                raise MixedFields("element of another field")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, RFElem):
            return teich_lift(value, self)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into K")

    def parse(self, text, prec=None):
        """Parse a literal such as ``(2*g+1)*pi^0 + (1)*pi^2`` or ``-3``.

        Residue coefficients are lifted naively (integer coefficients on the
        basis g^i), so in the mixed model ``5`` means the integer 5.
        """
        P = self.N if prec is None else prec
        poly = parse_poly(text, ["g", "pi", "t"] if not self.mixed else ["g", "pi"])
        F = self.residue
        if self.mixed:
            coeffs = [0] * (max((m[0] for m in poly), default=0) + 1)
            for mono, c in poly.items():
                coeffs[mono[0]] += c * self.p ** mono[1]
            raw = _reduce_int_poly(coeffs, F.modulus, self.p ** P)
            return KElem(self, raw + (0,) * (F.d - len(raw)), P)
        by_t = {}
        for mono, c in poly.items():
            e = mono[1] + (mono[2] if len(mono) > 2 else 0)
            by_t.setdefault(e, {})
            by_t[e][mono[0]] = by_t[e].get(mono[0], 0) + c
        raw = [0] * P
        for e, gpoly in by_t.items():
            if e < P:
                vec = [0] * (max(gpoly) + 1)
                for ge, c in gpoly.items():
                    vec[ge] = c
                raw[e] = (F(vec)).code
        return KElem(self, tuple(raw), P)


@lru_cache(maxsize=None)
def _ring(K, P):
    if K.mixed:
        return _MixedRing(K.p, K.residue.d, K.residue.modulus, P)
    return _EqualRing(K.residue, P)


def _reduce_int_poly(coeffs, modulus, M):
    coeffs = list(coeffs)
    d = len(modulus) - 1
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(d + 1):
                coeffs[i - d + j] -= c * modulus[j]
    return tuple(x % M for x in coeffs[:d])


class KElem:
    """Element of O_K known modulo pi^prec."""

    __slots__ = ("owner", "raw", "prec")

    def __init__(self, owner, raw, prec):
        self.owner = owner
        self.raw = raw
        self.prec = prec

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, KElem):
            if other.owner is not self.owner and other.owner != self.owner:
                raise MixedFields("elements of different fields")
            return other
        if isinstance(other, int):
            return self.owner.from_int(other)
        if isinstance(other, RFElem):
            return teich_lift(other, self.owner)
        return NotImplemented

    def truncate(self, P):
        """The same element viewed at precision min(prec, P)."""
        if P >= self.prec:
            return self
        K = self.owner
        if K.mixed:
            return KElem(K, K.ring(P).reduce(self.raw), P)
        return KElem(K, self.raw[:P], P)

    def _binary(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        P = min(self.prec, other.prec)
        a, b = self.truncate(P), other.truncate(P)
        return KElem(self.owner, getattr(self.owner.ring(P), op)(a.raw, b.raw), P)

    def __add__(self, other):
        return self._binary(other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, "sub")

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._binary(other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        return KElem(self.owner, self.owner.ring(self.prec).neg(self.raw), self.prec)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        R = self.owner.ring(self.prec)
        result, base = R.one, self.raw
        while e:
            if e & 1:
                result = R.mul(result, base)
            e >>= 1
            if e:
                base = R.mul(base, base)
        return KElem(self.owner, result, self.prec)

    def inverse(self):
        """Inverse of a unit by Newton iteration x <- x(2 - a x)."""
        if self.val() != 0:
            raise NonUnitInverse("only units are invertible in O_K")
        K = self.owner
        x = K.naive_lift(self.residue().inverse(), self.prec)
        two = K.from_int(2, self.prec)
        correct = 1
        while correct < self.prec:
            x = x * (two - self * x)
            correct *= 2
        return x

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        P = min(self.prec, other.prec)
        return self.truncate(P).raw == other.truncate(P).raw

    def __hash__(self):
        return hash((self.raw, self.prec))

    # -- valuation and digits ------------------------------------------------

    def is_zero(self):
        return not any(self.raw)

    def val(self):
        """Valuation, or BelowPrecision(prec) when no digit is nonzero."""
        K = self.owner
        if K.mixed:
            best = None
            p = K.p
            for c in self.raw:
                if c:
                    v = 0
                    while c % p == 0:
                        c //= p
                        v += 1
                    best = v if best is None else min(best, v)
            return BelowPrecision(self.prec) if best is None else best
        for i, c in enumerate(self.raw):
            if c:
                return i
        return BelowPrecision(self.prec)

    def residue(self):
        K = self.owner
        F = K.residue
        if self.prec < 1:
            raise ValueError("no residue at precision 0")
        if K.mixed:
            return F(self.raw)
        return F.from_code(self.raw[0])

    def shift(self, e):
        """Multiply by pi^e (e >= 0)."""
        K = self.owner
        P = min(self.prec + e, K.N)
        if K.mixed:
            M = K.p ** P
            f = K.p ** e
            return KElem(K, tuple(c * f % M for c in self.raw), P)
        return KElem(K, ((0,) * e + self.raw)[:P], P)

    def unshift(self, e):
        """Exact division by pi^e; loses e digits of absolute precision."""
        K = self.owner
        if e == 0:
            return self
        v = self.val()
        if isinstance(v, int) and v < e:
            raise ValueError(f"element not divisible by pi^{e}")
        P = max(self.prec - e, 0)
        if K.mixed:
            f = K.p ** e
            M = K.p ** P
            return KElem(K, tuple((c // f) % M for c in self.raw), P)
        return KElem(K, self.raw[e:], P)

    def digit(self, i):
        """The i-th Teichmueller digit (a residue element)."""
        if i >= self.prec:
            raise ValueError(f"digit {i} beyond precision {self.prec}")
        K = self.owner
        if not K.mixed:
            return K.residue.from_code(self.raw[i])
        return _mixed_digits(self)[i]

    def teich_digits(self):
        """Nonzero Teichmueller digits as an ordered list of (valuation, RFElem)."""
        K = self.owner
        if K.mixed:
            digits = _mixed_digits(self)
        else:
            digits = [K.residue.from_code(c) for c in self.raw]
        return [(i, a) for i, a in enumerate(digits) if not a.is_zero()]

    def literal(self):
        """Literal that parses back (at the field precision) to this element."""
        K = self.owner
        F = K.residue
        terms = []
        if K.mixed:
            p = K.p
            rest = list(self.raw)
            for e in range(self.prec):
                vec = []
                for i, c in enumerate(rest):
                    rest[i], r = divmod(c, p)
                    vec.append(r)
                if any(vec):
                    terms.append((e, F(vec)))
        else:
            terms = [(e, F.from_code(c)) for e, c in enumerate(self.raw) if c]
        if not terms:
            return "0"
        return " + ".join(f"({a.literal()})*pi^{e}" for e, a in terms)

    def __repr__(self):
        return f"KElem({self.literal()!r}, prec={self.prec})"

    __str__ = literal


def _mixed_digits(x):
    K = x.owner
    p = K.p
    P = x.prec
    digits = []
    rem = x
    for i in range(P):
        pi_i = p ** i
        vec = [(c // pi_i) % p for c in rem.raw]
        a = K.residue(vec)
        digits.append(a)
        if not a.is_zero():
            rem = rem - teich_lift(a, K).truncate(P).shift(i).truncate(P)
    return digits


def teich_lift(a, K):
    """Teichmueller representative of the residue element ``a`` at precision N."""
    a = K.residue(a)
    key = a.coeffs
    hit = K._teich.get(key)
    if hit is not None:
        return hit
    if not K.mixed or a.is_zero():
        out = K.naive_lift(a)
    else:
        y = K.naive_lift(a)
        for _ in range(K.N):
            y = y ** K.q
        out = y
    K._teich[key] = out
    return out


def k_make(spec):
    """Build a LocalField from a dict {"model", "p", "d", "modulus", "precision"}."""
    try:
        model = spec["model"]
        p = int(spec["p"])
        d = int(spec.get("d", 1))
        modulus = spec.get("modulus")
        N = int(spec["precision"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadSpec(f"bad field spec: {exc}") from exc
    if N < 1:
        raise BadSpec("precision must be >= 1")
    return LocalField(model, rf_make(p, d, modulus), N)


def k_val(x):
    return x.val()


def k_add(x, y):
    return x + y


def k_mul(x, y):
    return x * y


def k_neg(x):
    return -x


def k_inv(x):
    return x.inverse()


def teich_digits(x):
    return x.teich_digits()

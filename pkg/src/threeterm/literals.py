"""Tiny parser for the polynomial literals used in field, element and
polynomial files.

An expression is evaluated to a sparse integer polynomial: a dict that maps
exponent tuples (one slot per allowed variable) to integer coefficients.
Supported syntax: integers, variables, ``+ - *``, ``^`` or ``**`` with a
nonnegative integer exponent, and parentheses.
"""

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad literal {text!r} at offset {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def _add(a, b, sign=1):
    out = dict(a)
    for mono, c in b.items():
        v = out.get(mono, 0) + sign * c
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return out


def _mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(mono, 0) + ca * cb
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


class _Parser:
    def __init__(self, text, variables):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = tuple(variables)
        self.text = text
        self.zero = (0,) * len(self.vars)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, what):
        raise ValueError(f"bad literal {self.text!r}: {what}")

    def parse(self):
        if not self.toks:
            self.fail("empty")
        val = self.expr()
        if self.i != len(self.toks):
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            val = _add(val, self.term(), sign)
        return val

    def term(self):
        val = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            val = _mul(val, self.unary())
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return {m: -c for m, c in self.unary().items()}
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "int":
                self.fail("exponent must be a nonnegative integer")
            out = {self.zero: 1}
            for _ in range(e):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return {self.zero: val} if val else {}
        if kind == "var":
            if val not in self.vars:
                self.fail(f"unknown symbol {val!r}")
            mono = [0] * len(self.vars)
            mono[self.vars.index(val)] = 1
            return {tuple(mono): 1}
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return inner
        self.fail(f"unexpected token {val!r}")


def parse_poly(text, variables):
    """Evaluate ``text`` to ``{exponent_tuple: int}`` over ``variables``.

    >>> parse_poly("g^2 + 1", ["g"])
    {(2,): 1, (0,): 1}
    """
    if isinstance(text, int):
        return {(0,) * len(variables): text} if text else {}
    return _Parser(str(text), variables).parse()


def format_univariate(coeffs, var):
    """Render integer coefficients (low degree first) high degree first."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"

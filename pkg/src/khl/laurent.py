"""Exact Laurent polynomials in one or two variables.

Coefficients are Python ints or Fractions; no floating point is used
anywhere.  One-variable polynomials serve the Jones/Alexander oracles,
two-variable (q, t) polynomials carry Poincare polynomials of bigraded
homology groups.
"""

from __future__ import annotations

import re
from fractions import Fraction


class Laurent:
    """Laurent polynomial in a single variable with exact coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var="q"):
        self.var = var
        self.coeffs = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    self.coeffs[int(e)] = c

    @classmethod
    def monomial(cls, exp, coeff=1, var="q"):
        return cls({exp: coeff}, var=var)

    @classmethod
    def zero(cls, var="q"):
        return cls({}, var=var)

    @classmethod
    def one(cls, var="q"):
        return cls({0: 1}, var=var)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other}, var=self.var)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other}, var=self.var)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out, var=self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other}, var=self.var)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return Laurent(out, var=self.var)

    def __neg__(self):
        return Laurent({e: -c for e, c in self.coeffs.items()}, var=self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({e: c * other for e, c in self.coeffs.items()}, var=self.var)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Laurent.one(var=self.var)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by var**k."""
        return Laurent({e + k: c for e, c in self.coeffs.items()}, var=self.var)

    def invert_variable(self):
        """Substitute var -> var**-1."""
        return Laurent({-e: c for e, c in self.coeffs.items()}, var=self.var)

    def evaluate(self, x):
        """Evaluate at an exact rational x != 0."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += Fraction(c) * x ** e
        return total

    def degrees(self):
        return sorted(self.coeffs)

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_degree(self):
        return max(self.coeffs) if self.coeffs else 0

    def __getitem__(self, e):
        return self.coeffs.get(e, 0)

    def is_palindromic(self):
        """Coefficient of x^k equals coefficient of x^-k (after centering)."""
        if not self.coeffs:
            return True
        center = self.min_degree() + self.max_degree()
        if center % 2 != 0:
            return False
        c = center // 2
        return all(self[c + k] == self[c - k] for k in range(self.max_degree() - c + 1))

    def __str__(self):
        return format_terms(sorted(((e,), c) for e, c in self.coeffs.items()), (self.var,))

    def __repr__(self):
        return "Laurent(%s)" % self


class Poly2:
    """Laurent polynomial in two variables, by default (q, t)."""

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs=None, vars=("q", "t")):
        self.vars = tuple(vars)
        self.coeffs = {}
        if coeffs:
            for key, c in dict(coeffs).items():
                if c:
                    self.coeffs[(int(key[0]), int(key[1]))] = c

    @classmethod
    def monomial(cls, qexp, texp, coeff=1, vars=("q", "t")):
        return cls({(qexp, texp): coeff}, vars=vars)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Poly2(out, vars=self.vars)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return Poly2(out, vars=self.vars)

    def specialize_second(self, value):
        """Substitute an exact value for the second variable; returns Laurent."""
        value = Fraction(value)
        out = {}
        for (e1, e2), c in self.coeffs.items():
            out[e1] = out.get(e1, 0) + Fraction(c) * value ** e2
        cleaned = {}
        for e, c in out.items():
            if c:
                cleaned[e] = int(c) if c.denominator == 1 else c
        return Laurent(cleaned, var=self.vars[0])

    def total_coefficient_sum(self):
        return sum(self.coeffs.values())

    def __str__(self):
        ordered = sorted(((k[1], k[0]), (k, c)) for k, c in self.coeffs.items())
        return format_terms([(k, c) for _, (k, c) in ordered], self.vars)

    def __repr__(self):
        return "Poly2(%s)" % self


def format_terms(terms, names):
    """Render [(exponent-tuple, coeff), ...] as e.g. 'q^-5*t^-4 + 2*q'."""
    parts = []
    for exps, coeff in terms:
        if not coeff:
            continue
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append("%s^%d" % (name, e))
        mag = abs(coeff)
        body = "*".join(factors)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = "%s*%s" % (mag, body)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(r"([+-]?[^+-]+)")


def parse_poly(text, vars=("q", "t")):
    """Parse expressions like 'q^-5*t^-4 + q^-1*t^-3 + 2*q + 1' into Poly2.

    Accepts integer coefficients, '^' exponents, '*' separators, and
    whitespace anywhere.  One-variable input is fine: absent variables get
    exponent 0.
    """
    compact = text.replace(" ", "")
    if not compact:
        return Poly2(vars=vars)
    coeffs = {}
    pos = 0
    for m in _TERM_RE.finditer(compact):
        term = m.group(1)
        pos = m.end()
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        elif term.startswith("+"):
            term = term[1:]
        coeff = sign
        exps = {v: 0 for v in vars}
        for factor in term.split("*"):
            if not factor:
                raise ValueError("empty factor in %r" % text)
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            fm = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", factor)
            if not fm or fm.group(1) not in exps:
                raise ValueError("cannot parse factor %r in %r" % (factor, text))
            exps[fm.group(1)] += int(fm.group(2)) if fm.group(2) else 1
        key = tuple(exps[v] for v in vars)
        coeffs[key] = coeffs.get(key, 0) + coeff
    if pos != len(compact):
        raise ValueError("trailing garbage in %r" % text)
    return Poly2(coeffs, vars=vars)

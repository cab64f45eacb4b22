"""Exact bivariate polynomials with arbitrary-precision rational
coefficients.

Terms are stored sparsely as {(x-exponent, y-exponent): Fraction} with no
zero coefficients.  The polynomial ring R = k[x,y] acts on its dual
E = k[X,Y] by differentiation (apolarity): x^i y^j sends X^u Y^v to
u(u-1)...(u+1-i) * v(v-1)...(v+1-j) * X^(u-i) Y^(v-j), zero when an
exponent is insufficient.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, ZeroInput

__all__ = [
    "BivariatePoly",
    "contract",
    "falling_factorial",
    "parse_poly",
    "X_VARS",
]

X_VARS = ("X", "Y")


class BivariatePoly:
    """A polynomial in two variables over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[(int(a), int(b))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, a, b, coeff=1):
        return cls({(a, b): Fraction(coeff)})

    @classmethod
    def linear(cls, a, b):
        """The linear form a*x + b*y."""
        return cls({(1, 0): Fraction(a), (0, 1): Fraction(b)})

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {a + b for a, b in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        if self.is_zero():
            raise ZeroInput("zero polynomial has no homogeneous degree")
        if not self.is_homogeneous():
            raise ParseError(f"{self} is not homogeneous")
        return self.degree()

    def coefficient(self, a, b):
        return self.terms.get((a, b), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return BivariatePoly(out)

    def __neg__(self):
        return BivariatePoly({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BivariatePoly):
            out = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    key = (a1 + a2, b1 + b2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return BivariatePoly(out)
        return BivariatePoly(
            {key: c * Fraction(other) for key, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = BivariatePoly.monomial(0, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ------------------------------------------------------

    def substitute(self, px, py):
        """Evaluate at x = px, y = py for polynomial arguments."""
        out = BivariatePoly.zero()
        powers_x = {0: BivariatePoly.monomial(0, 0)}
        powers_y = {0: BivariatePoly.monomial(0, 0)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        for (a, b), c in self.terms.items():
            out = out + c * (power(powers_x, px, a) * power(powers_y, py, b))
        return out

    def evaluate(self, a, b):
        """Value at the rational point (a, b)."""
        a, b = Fraction(a), Fraction(b)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * a**i * b**j
        return total

    # -- printing ----------------------------------------------------------

    def sorted_terms(self):
        """Terms ordered degree-descending in y then x."""
        return sorted(self.terms.items(), key=lambda t: (-t[0][1], -t[0][0]))

    def text(self, variables=("x", "y")):
        if self.is_zero():
            return "0"
        vx, vy = variables
        pieces = []
        for (a, b), c in self.sorted_terms():
            factors = []
            if a:
                factors.append(vx if a == 1 else f"{vx}^{a}")
            if b:
                factors.append(vy if b == 1 else f"{vy}^{b}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(pieces)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"BivariatePoly({self.text()!r})"


def falling_factorial(u, i):
    """u (u-1) ... (u+1-i); equals 1 when i = 0."""
    out = 1
    for t in range(i):
        out *= u - t
    return out


def contract(f, F):
    """Apolarity action of f on F by differentiation, extended bilinearly."""
    out = {}
    for (i, j), c in f.terms.items():
        for (u, v), C in F.terms.items():
            if u < i or v < j:
                continue
            key = (u - i, v - j)
            coeff = c * C * falling_factorial(u, i) * falling_factorial(v, j)
            out[key] = out.get(key, Fraction(0)) + coeff
    return BivariatePoly(out)


_TERM_RE = re.compile(
    r"""
    (?P<coeff>\d+(?:/\d+)?)?          # optional rational coefficient
    (?P<vars>(?:\*?\s*[xyXY](?:\s*\^\s*\d+)?)*)   # variable factors
    """,
    re.VERBOSE,
)


def _parse_term(text, original):
    text = text.strip()
    if not text:
        raise ParseError(f"empty term in {original!r}")
    m = _TERM_RE.fullmatch(text)
    if not m or (m.group("coeff") is None and not m.group("vars").strip()):
        raise ParseError(f"bad term {text!r} in {original!r}")
    coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
    a = b = 0
    for var, exp in re.findall(r"([xyXY])(?:\s*\^\s*(\d+))?", m.group("vars")):
        power = int(exp) if exp else 1
        if var in ("x", "X"):
            a += power
        else:
            b += power
    return (a, b), coeff


def parse_poly(text):
    """Parse "y^4 + x^4", "3/2*x*y^3", "x^2y" (implicit *), in x,y or X,Y."""
    original = text
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    if text == "0":
        return BivariatePoly.zero()
    # split into signed terms
    pieces = re.split(r"(?<!\^)([+-])", text)
    terms = {}
    sign = 1
    start = pieces[0].strip()
    index = 1
    if start == "":
        if len(pieces) < 2 or pieces[1] == "+":
            sign = 1
        elif pieces[1] == "-":
            sign = -1
        else:
            raise ParseError(f"bad leading sign in {original!r}")
        start = pieces[2].strip() if len(pieces) > 2 else ""
        index = 3
    key, coeff = _parse_term(start, original)
    terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    while index < len(pieces):
        sign = 1 if pieces[index] == "+" else -1
        if index + 1 >= len(pieces):
            raise ParseError(f"dangling sign in {original!r}")
        key, coeff = _parse_term(pieces[index + 1], original)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        index += 2
    return BivariatePoly(terms)

"""Dense univariate polynomials and rational functions over exact rationals.

Coefficients are `fractions.Fraction`; index equals the power of the
variable.  The zero polynomial keeps an empty coefficient tuple and reports
degree ``-inf`` so degree comparisons never lean on ``-1`` arithmetic.

Rational functions are kept in canonical form: numerator and denominator
coprime, denominator monic, the zero function stored as 0/1.  That makes
structural equality coincide with mathematical equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def as_fraction(x: object) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        """The identity polynomial (the variable itself)."""
        return cls((0, 1))

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, power: int) -> Fraction:
        """Coefficient of the given power (0 beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial.constant(-as_fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        """Exact long division over the rationals."""
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(as_fraction(other))
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for shift in range(len(rem) - 1 - db, -1, -1):
            q = rem[shift + db] / lb
            if q:
                quot[shift] = q
                for j, c in enumerate(other.coeffs):
                    rem[shift + j] -= q * c
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Divide, insisting the remainder vanish."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- calculus / substitution --------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.coeffs[-1]
        return self if lc == 1 else Polynomial([c / lc for c in self.coeffs])

    def shift(self, c: Scalar) -> "Polynomial":
        """Substitute x -> x - c, i.e. return p(x - c)."""
        c = as_fraction(c)
        if c == 0:
            return self
        arg = Polynomial((-c, 1))
        result = Polynomial()
        for coeff in reversed(self.coeffs):
            result = result * arg + coeff
        return result

    def __call__(self, x):
        """Horner evaluation; x may be Fraction, int, float or complex."""
        result = x * 0
        for coeff in reversed(self.coeffs):
            if isinstance(x, (int, Fraction)):
                result = result * x + coeff
            else:
                result = result * x + float(coeff)
        return result

    # -- serialization ------------------------------------------------

    def to_strings(self) -> list[str]:
        """Ascending-power list of 'p/q' coefficient strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls([Fraction(s) for s in items])

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


X = Polynomial.x()


# -- gcd machinery (primitive pseudo-remainder sequence) ---------------


def _integer_coeffs(p: Polynomial) -> list[int]:
    """Scale to integer coefficients (common denominator cleared)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs]


def _primitive(ints: list[int]) -> list[int]:
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return ints
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # Remainder of a by b up to powers of lead(b); stays in Z[x].
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        t = r[-1]
        r = [lb * c for c in r]
        off = len(r) - 1 - db
        for j in range(db + 1):
            r[off + j] -= t * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via a primitive pseudo-remainder sequence (exact, no blowup)."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    fa = _primitive(_integer_coeffs(a))
    fb = _primitive(_integer_coeffs(b))
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _primitive(_pseudo_rem(fa, fb))
    return Polynomial(fa).monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return Polynomial()
    return (a * b.exact_div(poly_gcd(a, b))).monic()


def square_free_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic, pairwise coprime, square-free factors.

    Returns [(factor, multiplicity), ...] with p = lead(p) * prod factor^mult.
    Constants decompose to the empty list.
    """
    if p.is_zero:
        raise DomainError("zero polynomial has no square-free decomposition")
    p = p.monic()
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    d = dp.exact_div(a) - b.derivative()
    out: list[tuple[Polynomial, int]] = []
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f, i))
        b = b.exact_div(f)
        d = d.exact_div(f) - b.derivative()
        i += 1
    return out


def square_free_part(p: Polynomial) -> Polynomial:
    """Radical of p: product of its distinct irreducible factors, monic."""
    if p.is_zero:
        raise DomainError("zero polynomial has no square-free part")
    if p.degree <= 0:
        return Polynomial.one()
    return p.monic().exact_div(poly_gcd(p, p.derivative()))


def is_square_free(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


# -- rational functions -------------------------------------------------


class RationalFunction:
    """Reduced quotient of polynomials; denominator monic, zero stored as 0/1."""

    __slots__ = ("num", "den")

    num: Polynomial
    den: Polynomial

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(as_fraction(num))
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(as_fraction(den))
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Polynomial(), Polynomial.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.lead
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial(), Polynomial.one())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.one(), Polynomial.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(other if isinstance(other, Polynomial) else Polynomial.constant(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"evaluation at a pole: {x}")
        return self.num(x) / d

    def shift(self, c: Scalar) -> "RationalFunction":
        """Substitute x -> x - c in numerator and denominator."""
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def to_strings(self) -> dict[str, list[str]]:
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial:
            return str(self.num * (1 / self.den[0]))
        return f"({self.num}) / ({self.den})"


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction(Polynomial.constant(x))
    return NotImplemented


def ratfun_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical reduced form of num/den (coprime, monic denominator)."""
    return RationalFunction(num, den)

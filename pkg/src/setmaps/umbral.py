"""Exact polynomials, linear functionals, and binomial-type polynomial bases.

Functionals on polynomials are stored by their moment vector (the values
on 1, x, x^2, ..., x^D) and multiply umbrally:

    (L M) x^n = sum_k C(n, k) (L x^k) (M x^{n-k}),

an associative, commutative product whose unit is evaluation at 0.  A
delta functional A has A 1 = 0 and A x != 0.

A polynomial sequence a_0(x), a_1(x), ... with deg a_n = n is of binomial
type when a_n(x+y) = sum_k C(n,k) a_k(x) a_{n-k}(y).  Every family here
knows its associated delta functional A, characterized by
A^k a_n = k! [n == k]; that is what turns coefficient extraction in these
bases into a single functional application.  Shipped families: monomials
x^n, falling factorials (x/a)_n, rising factorials x(x+1)...(x+n-1),
Abel polynomials x(x - a n)^{n-1}, and the basis with exponential
generating function (1 + log(1+t))^x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .ring import partitions_of

_Scalar = (int, Fraction)


class Poly:
    """Dense univariate polynomial over Fraction; coeffs[k] multiplies x^k.

    Normalized: no trailing zero coefficients; the zero polynomial stores
    an empty tuple and reports degree -1 (a stand-in for minus infinity).
    Immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, _Scalar):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        # constants hash like their scalar value so Poly == scalar stays coherent
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, _Scalar):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, _Scalar):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _Scalar):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, point) -> Fraction:
        x = point if isinstance(point, Fraction) else Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"


def interpolate(points: Sequence[tuple]) -> Poly:
    """Exact Newton interpolation through the given (x, y) points."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    ys = [Fraction(y) for _, y in points]
    coeffs = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    result = Poly.zero()
    basis = Poly.one()
    for i, c in enumerate(coeffs):
        result = result + basis * c
        if i + 1 < len(xs):
            basis = basis * Poly((-xs[i], 1))
    return result


class Functional:
    """Linear functional on polynomials, stored by moments on 1, x, x^2, ...

    Applying to a polynomial of degree above the stored bound is an error,
    never a truncation.
    """

    __slots__ = ("moments",)

    def __init__(self, moments: Iterable):
        ms = tuple(m if isinstance(m, Fraction) else Fraction(m) for m in moments)
        if not ms:
            raise ValueError("a functional needs at least the moment on 1")
        self.moments = ms

    @classmethod
    def evaluation_at(cls, point, bound: int) -> "Functional":
        c = Fraction(point)
        return cls(tuple(c**k for k in range(bound + 1)))

    @classmethod
    def derivative_at(cls, point, bound: int) -> "Functional":
        c = Fraction(point)
        return cls((Fraction(0),) + tuple(k * c ** (k - 1) for k in range(1, bound + 1)))

    @property
    def bound(self) -> int:
        return len(self.moments) - 1

    def is_delta(self) -> bool:
        return self.moments[0] == 0 and len(self.moments) > 1 and self.moments[1] != 0

    def __call__(self, f: Poly) -> Fraction:
        if f.degree > self.bound:
            raise ValueError(
                f"polynomial degree {f.degree} exceeds functional bound {self.bound};"
                " refusing to truncate"
            )
        acc = Fraction(0)
        for c, m in zip(f.coeffs, self.moments):
            acc += c * m
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Functional):
            return NotImplemented
        return self.moments == other.moments

    def __hash__(self) -> int:
        return hash(self.moments)

    def __mul__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        if len(self.moments) != len(other.moments):
            raise ValueError("umbral product requires matching degree bounds")
        out = []
        for m in range(len(self.moments)):
            acc = Fraction(0)
            for k in range(m + 1):
                acc += math.comb(m, k) * self.moments[k] * other.moments[m - k]
            out.append(acc)
        return Functional(out)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("functional powers must be nonnegative integers")
        if k == 0:
            # the umbral unit: evaluation at 0, i.e. f -> f(0)
            return Functional.evaluation_at(0, self.bound)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"Functional([{', '.join(str(m) for m in self.moments)}])"


@lru_cache(maxsize=None)
def _family_poly(family: "BinomialFamily", n: int) -> Poly:
    return family._poly_impl(n)


class BinomialFamily:
    """A binomial-type polynomial basis together with its delta functional."""

    def poly(self, n: int) -> Poly:
        """The degree-n member of the family; a_0 = 1."""
        if n < 0:
            raise ValueError("family index must be nonnegative")
        return _family_poly(self, n)

    def _poly_impl(self, n: int) -> Poly:
        raise NotImplementedError

    def delta(self, bound: int) -> Functional:
        """Moment vector, up to the given degree, of the associated functional."""
        raise NotImplementedError

    def coefficients(self, f: Poly) -> tuple:
        """Coefficients c with f = sum_k c_k * a_k(x), by triangular elimination."""
        if not f:
            return ()
        out = [Fraction(0)] * (f.degree + 1)
        remainder = f
        while remainder:
            d = remainder.degree
            basis = self.poly(d)
            c = remainder.coeffs[d] / basis.coeffs[d]
            out[d] = c
            remainder = remainder - basis * c
        return tuple(out)

    def _check_bound(self, bound: int) -> None:
        if bound < 1:
            raise ValueError("a delta functional needs a degree bound of at least 1")


@dataclass(frozen=True)
class Monomials(BinomialFamily):
    """The basis x^n; delta functional f -> f'(0)."""

    def _poly_impl(self, n: int) -> Poly:
        return Poly.monomial(n)

    def delta(self, bound: int) -> Functional:
        self._check_bound(bound)
        return Functional.derivative_at(0, bound)

    def __str__(self) -> str:
        return "monomial"


@dataclass(frozen=True)
class FallingFactorials(BinomialFamily):
    """The basis (x/a)_n = (x/a)(x/a - 1)...(x/a - n + 1), a != 0.

    Delta functional f -> f(a) - f(0).
    """

    step: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))
        if self.step == 0:
            raise ValueError("falling-factorial step must be nonzero")

    def _poly_impl(self, n: int) -> Poly:
        scaled = Poly((0, Fraction(1) / self.step))
        result = Poly.one()
        for i in range(n):
            result = result * (scaled - i)
        return result

    def delta(self, bound: int) -> Functional:
        self._check_bound(bound)
        a = self.step
        return Functional((Fraction(0),) + tuple(a**k for k in range(1, bound + 1)))

    def __str__(self) -> str:
        return f"falling:{self.step}"


@dataclass(frozen=True)
class RisingFactorials(BinomialFamily):
    """The basis x(x+1)...(x+n-1); delta functional f -> f(0) - f(-1).

    The functional is forced by x^(n) = (-1)^n (-x)_n and is checked by the
    associated-functional property tests rather than assumed.
    """

    def _poly_impl(self, n: int) -> Poly:
        result = Poly.one()
        for i in range(n):
            result = result * Poly((i, 1))
        return result

    def delta(self, bound: int) -> Functional:
        self._check_bound(bound)
        # moments of f(0) - f(-1): 0^k - (-1)^k
        return Functional((Fraction(0),) + tuple(-((-1) ** k) for k in range(1, bound + 1)))

    def __str__(self) -> str:
        return "rising"


@dataclass(frozen=True)
class AbelPolynomials(BinomialFamily):
    """The basis x(x - a n)^{n-1}; delta functional f -> f'(a)."""

    point: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "point", Fraction(self.point))

    def _poly_impl(self, n: int) -> Poly:
        if n == 0:
            return Poly.one()
        return Poly.x() * Poly((-self.point * n, 1)) ** (n - 1)

    def delta(self, bound: int) -> Functional:
        self._check_bound(bound)
        return Functional.derivative_at(self.point, bound)

    def __str__(self) -> str:
        return f"abel:{self.point}"


@dataclass(frozen=True)
class LogPolynomials(BinomialFamily):
    """The basis with EGF (1 + log(1+t))^x.

    Member n is the set-partition sum over partitions of an n-set of
    (x)_len(sigma) * prod over blocks T of (-1)^(|T|-1) (|T|-1)!, i.e. the
    falling-factorial coefficients are signed Stirling numbers of the
    first kind.  Its delta functional B has B (x)_n = 1 for n > 0 and
    B 1 = 0; the stored moments convert that rule to the monomial basis.
    """

    def _poly_impl(self, n: int) -> Poly:
        falling = FallingFactorials()
        acc = Poly.zero()
        for sigma in partitions_of((1 << n) - 1, cap=max(n, 14)):
            weight = 1
            for block in sigma:
                size = block.bit_count()
                weight *= math.factorial(size - 1) if size % 2 == 1 else -math.factorial(size - 1)
            acc = acc + falling.poly(len(sigma)) * weight
        return acc

    def delta(self, bound: int) -> Functional:
        self._check_bound(bound)
        falling = FallingFactorials()
        moments = []
        for k in range(bound + 1):
            cs = falling.coefficients(Poly.monomial(k))
            moments.append(sum(cs[1:], Fraction(0)))
        return Functional(moments)

    def __str__(self) -> str:
        return "logfamily"


def family_from_string(spec: str) -> BinomialFamily:
    """Parse a family spec: monomial | falling:a | rising | abel:a | logfamily.

    The parameter a is an exact rational literal such as 2, -1, or 3/4.
    """
    name, sep, arg = spec.strip().partition(":")
    name = name.lower()
    try:
        if name == "monomial" and not sep:
            return Monomials()
        if name == "rising" and not sep:
            return RisingFactorials()
        if name == "logfamily" and not sep:
            return LogPolynomials()
        if name == "falling" and sep:
            return FallingFactorials(Fraction(arg))
        if name == "abel" and sep:
            return AbelPolynomials(Fraction(arg))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad family parameter in {spec!r}: {exc}") from None
    raise ValueError(
        f"unknown family spec {spec!r}; expected monomial, falling:a, rising, abel:a, or logfamily"
    )


def standard_families() -> tuple[BinomialFamily, ...]:
    """The family instances exercised by the verification suites."""
    return (
        Monomials(),
        FallingFactorials(1),
        FallingFactorials(-1),
        FallingFactorials(2),
        RisingFactorials(),
        AbelPolynomials(0),
        AbelPolynomials(1),
        LogPolynomials(),
    )

"""Exact univariate arithmetic: dense rational polynomials and truncated
Laurent series.

All coefficients are ``fractions.Fraction`` (arbitrary-precision rationals,
always in lowest terms with positive denominator).  A ``TruncSeries`` is a
Laurent series known exactly on a window of exponents ``[low, order)``; every
binary operation takes the *minimum* of the two truncation orders so that
precision loss is explicit, never silent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


class FractionalLeadingExponent(ValueError):
    """Raised when a rational power would need a fractional leading exponent."""


class NegativeLeadingCoefficient(ValueError):
    """Raised when a rational power of a series with negative leading
    coefficient is requested (no principal branch over the rationals)."""


def _frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def binom_rat(p: Fraction, n: int) -> Fraction:
    """Generalized binomial coefficient C(p, n) for rational p."""
    out = Fraction(1)
    for k in range(n):
        out *= (p - k)
        out /= (k + 1)
    return out


def nth_root_exact(x: Fraction, n: int) -> Fraction:
    """Exact rational n-th root of x > 0, or raise ValueError if none exists."""
    if x <= 0:
        raise ValueError("argument must be positive")

    def iroot(m: int) -> int:
        if m in (0, 1):
            return m
        r = round(m ** (1.0 / n))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == m:
                return c
        raise ValueError(f"{m} has no exact integer {n}-th root")

    return Fraction(iroot(x.numerator), iroot(x.denominator))


# ---------------------------------------------------------------------------
# Dense univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over Fraction; coeffs[i] is the x^i term.

    Canonical form: no trailing zero coefficients (the zero polynomial has an
    empty coefficient tuple).
    """

    coeffs: tuple

    @staticmethod
    def of(cs: Iterable[Rat]) -> "Poly":
        cs = [_frac(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def const(c: Rat) -> "Poly":
        return Poly.of([c])

    @staticmethod
    def x_power(k: int, c: Rat = 1) -> "Poly":
        return Poly.of([0] * k + [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly.of([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c: Rat) -> "Poly":
        c = _frac(c)
        return Poly.of([ci * c for ci in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Poly.of(out)

    def deriv(self) -> "Poly":
        return Poly.of([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x: Rat) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def shift(self, a: Rat) -> "Poly":
        """Taylor shift: the polynomial p(a + t) in t (Horner on t + a)."""
        a = _frac(a)
        res = Poly(())
        for c in reversed(self.coeffs):
            res = res * Poly.of([a, 1]) + Poly.const(c)
        return res

    def content_free(self) -> "Poly":
        """Primitive integer form with positive leading coefficient."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Poly.of(ints)

    def valuation(self) -> int:
        """Lowest exponent with nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# Truncated Laurent series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Laurent series with exponents known exactly on [low, order).

    ``coeffs[i]`` is the coefficient of x^(low + i); len(coeffs) == order - low.
    Coefficients at or beyond ``order`` are unknown and never reported.
    """

    low: int
    coeffs: tuple
    order: int

    @staticmethod
    def make(low: int, cs: Sequence[Rat], order: int | None = None) -> "TruncSeries":
        cs = [_frac(c) for c in cs]
        if order is None:
            order = low + len(cs)
        if order - low != len(cs):
            raise ValueError("coefficient window does not match [low, order)")
        return TruncSeries(low, tuple(cs), order)

    @staticmethod
    def from_poly(p: Poly, order: int) -> "TruncSeries":
        cs = list(p.coeffs[:order]) + [Fraction(0)] * max(0, order - len(p.coeffs))
        return TruncSeries.make(0, cs[:order], order)

    @staticmethod
    def one(order: int) -> "TruncSeries":
        return TruncSeries.from_poly(Poly.const(1), order)

    @staticmethod
    def zero(order: int, low: int = 0) -> "TruncSeries":
        return TruncSeries.make(low, [0] * (order - low), order)

    def __getitem__(self, n: int) -> Fraction:
        """Coefficient of x^n; raises if n is at or beyond the truncation order."""
        if n >= self.order:
            raise IndexError(f"coefficient x^{n} beyond truncation order {self.order}")
        if n < self.low:
            return Fraction(0)
        return self.coeffs[n - self.low]

    def coeff_list(self, lo: int, hi: int) -> list:
        """Coefficients of x^lo .. x^(hi-1); hi must not exceed the order."""
        return [self[n] for n in range(lo, hi)]

    def _trimmed(self) -> "TruncSeries":
        cs = list(self.coeffs)
        low = self.low
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        return TruncSeries.make(low, cs, self.order)

    def valuation(self) -> int | None:
        """Exponent of the first nonzero known coefficient, or None if the
        series is zero through its truncation order."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return self.low + i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries.make(min(self.low, order), self.coeff_list(min(self.low, order), order), order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        low = min(self.low, other.low)
        return TruncSeries.make(low, [self_i + other_i for self_i, other_i in
                                      zip(self.coeff_list(low, order), other.coeff_list(low, order))], order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + other.scale(-1)

    def scale(self, c: Rat) -> "TruncSeries":
        c = _frac(c)
        return TruncSeries.make(self.low, [ci * c for ci in self.coeffs], self.order)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by x^k."""
        return TruncSeries.make(self.low + k, self.coeffs, self.order + k)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        # valuations sharpen the attainable order: x^a*(...)*x^b*(...)
        a = self._trimmed()
        b = other._trimmed()
        order = min(a.order + b.low, b.order + a.low)
        low = a.low + b.low
        n = order - low
        if n <= 0:
            return TruncSeries.make(low, [], low)
        out = [Fraction(0)] * n
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            jmax = min(len(b.coeffs), n - i)
            for j in range(jmax):
                cb = b.coeffs[j]
                if cb != 0:
                    out[i + j] += ca * cb
        return TruncSeries.make(low, out, order)

    def mul_poly(self, p: Poly) -> "TruncSeries":
        """Multiply by an exactly-known polynomial (order improves by its
        valuation)."""
        if p.is_zero():
            return TruncSeries.zero(self.order, self.low)
        val = p.valuation()
        order = self.order + val
        low = self.low + val
        n = order - low
        out = [Fraction(0)] * n
        for i, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for j in range(val, len(p.coeffs)):
                cb = p.coeffs[j]
                if cb == 0:
                    continue
                k = i + j - val
                if k < n:
                    out[k] += ca * cb
        return TruncSeries.make(low, out, order)

    def deriv(self) -> "TruncSeries":
        """Termwise derivative; the truncation order drops by one."""
        cs = [(self.low + i) * c for i, c in enumerate(self.coeffs)]
        return TruncSeries.make(self.low - 1, cs, self.order - 1)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; leading known coefficient must be nonzero."""
        t = self._trimmed()
        if t.is_zero() or t.coeffs[0] == 0:
            raise ZeroDivisionError("series has no known nonzero leading term")
        n = t.order - t.low
        a0 = t.coeffs[0]
        inv = [Fraction(0)] * n
        inv[0] = 1 / a0
        for k in range(1, n):
            s = Fraction(0)
            for j in range(1, min(k, len(t.coeffs) - 1) + 1):
                s += t.coeffs[j] * inv[k - j]
            inv[k] = -s / a0
        return TruncSeries.make(-t.low, inv, -t.low + n)

    def compose_ps(self, coeff_fn, n_terms: int | None = None) -> "TruncSeries":
        """Substitute this series (valuation >= 1 required) into the power
        series sum_k coeff_fn(k) * u^k, truncated at this series' order.

        Horner evaluation; coeff_fn(k) must return a Fraction.
        """
        u = self._trimmed()
        val = u.valuation()
        if val is None:
            return TruncSeries.from_poly(Poly.const(coeff_fn(0)), u.order)
        if val < 1:
            raise ValueError("substituted series must have positive valuation")
        order = u.order
        if n_terms is None:
            n_terms = order // val + 1
        acc = TruncSeries.from_poly(Poly.const(coeff_fn(n_terms - 1)), order)
        for k in range(n_terms - 2, -1, -1):
            acc = (acc * u).truncate(order) + TruncSeries.from_poly(Poly.const(coeff_fn(k)), order)
        return acc

    def pow_int(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.inverse().pow_int(-n)
        out = TruncSeries.from_poly(Poly.const(1), self.order)
        for _ in range(n):
            out = out * self
        return out

    def pow_rational(self, p: Rat) -> "TruncSeries":
        """Rational power s^p via the binomial series on the unit part.

        Requires: leading exponent times p is an integer; leading coefficient
        positive with an exact rational p-th power (else the result would not
        have rational coefficients).
        """
        p = _frac(p)
        t = self._trimmed()
        if t.is_zero():
            raise ZeroDivisionError("rational power of the zero series")
        lead_exp = t.low
        new_low_f = Fraction(lead_exp) * p
        if new_low_f.denominator != 1:
            raise FractionalLeadingExponent(
                f"leading exponent {lead_exp} times {p} is not an integer")
        c0 = t.coeffs[0]
        if c0 < 0:
            raise NegativeLeadingCoefficient(
                "principal branch undefined over the rationals")
        try:
            root = nth_root_exact(c0, p.denominator)
        except ValueError as exc:
            raise NegativeLeadingCoefficient(
                f"leading coefficient {c0} has no exact rational power {p}") from exc
        c0p = root ** p.numerator
        # unit part u with u(0)=1; (1+w)^p via binomial series
        n = t.order - t.low
        unit = TruncSeries.make(0, [c / c0 for c in t.coeffs], n)
        w = unit - TruncSeries.one(n)
        powered = w.compose_ps(lambda k: binom_rat(p, k))
        return powered.scale(c0p).shift(int(new_low_f))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{c}*x^{self.low + i}")
            if len(terms) >= 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body} + O(x^{self.order}))"


def series_pow_rational(s: TruncSeries, p: Rat) -> TruncSeries:
    """Truncated series of s**p (binomial/Newton route), exact over Q."""
    return s.pow_rational(p)


def geometric_inverse_poly(p: Poly, order: int) -> TruncSeries:
    """Series expansion of 1/p(x) to the given order (p(0) != 0)."""
    return TruncSeries.from_poly(p, order).inverse()


def rational_series(num: Poly, den: Poly, order: int) -> TruncSeries:
    """Laurent expansion of num/den at 0, handling x^k factors exactly."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return TruncSeries.zero(order)
    vn, vd = num.valuation(), den.valuation()
    shift = vn - vd
    work = order - min(shift, 0) + 1
    num_t = TruncSeries.from_poly(Poly.of(num.coeffs[vn:]), work)
    den_t = TruncSeries.from_poly(Poly.of(den.coeffs[vd:]), work)
    return (num_t * den_t.inverse()).shift(shift).truncate(order)

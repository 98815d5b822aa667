"""Real root isolation for rational polynomials (Sturm-sequence bisection)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from .exact import Poly


def _int_coeffs(p: Poly) -> list[int]:
    return [int(c) for c in p.content_free().coeffs]


def _poly_div_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a / b over Q (dense coefficient lists, ascending)."""
    a = a[:]
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] -= q * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(cs: list[Fraction]) -> list[Fraction]:
    """Rescale to a primitive integer polynomial (controls growth)."""
    if not cs:
        return cs
    from math import lcm

    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [Fraction(v, g) for v in ints]


def sturm_chain(p: Poly) -> list[list[Fraction]]:
    chain = [list(p.content_free().coeffs), list(p.deriv().content_free().coeffs)]
    while len(chain[-1]) > 0:
        rem = _poly_div_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(_primitive([-c for c in rem]))
    return chain


def _eval(cs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for cs in chain:
        v = _eval(cs, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    chain = sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def smallest_positive_root(p: Poly, precision) -> Optional[Tuple[Fraction, Fraction]]:
    """Isolating interval (width <= precision) around the smallest positive
    real root of p, or None when p has no positive real root.

    Requires p(0) != 0 so that the root is bounded away from the origin.
    The returned endpoints straddle a sign change of p (the root is simple
    in all uses here; a root hit exactly returns a zero-width interval).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.eval(0) == 0:
        raise ValueError("p(0) must be nonzero")
    precision = Fraction(precision)
    cs = p.content_free().coeffs
    # Cauchy bound on positive roots
    lead = abs(cs[-1])
    bound = Fraction(1) + max(abs(c) for c in cs) / lead
    chain = sturm_chain(p)
    v_lo = _sign_changes(chain, Fraction(0))
    v_hi = _sign_changes(chain, bound)
    if v_lo - v_hi == 0:
        return None
    lo, hi = Fraction(0), bound
    n_lo, n_hi = v_lo, v_hi
    # shrink toward the leftmost root: keep count on (0, lo] == 0

    def isolated() -> bool:
        return hi - lo <= precision and n_lo - n_hi == 1 and p.eval(lo) * p.eval(hi) < 0

    for _ in range(10_000):
        if isolated():
            return (lo, hi)
        mid = (lo + hi) / 2
        if p.eval(mid) == 0:
            return (mid, mid)
        v_mid = _sign_changes(chain, mid)
        if n_lo - v_mid >= 1:  # a root lies in (lo, mid]
            hi, n_hi = mid, v_mid
        else:
            lo, n_lo = mid, v_mid
    raise ArithmeticError("root isolation did not converge (multiple root?)")

"""Real evaluation of the Gauss hypergeometric function for the parameter
families used by the density formulas, plus the connection machinery needed
on and above the branch cut.

Strategy (all in extended-precision mpmath arithmetic, >= 30 digits):

* |z| <= 1/2: direct series.
* z < -1/2: Pfaff transform to z/(z-1) in (0,1), then recurse.
* 1/2 < z < 1: direct series while 1-z is moderate and c-a-b > 0, else the
  connection at 1-z (two-term formula for non-integer c-a-b, logarithmic
  case for integer c-a-b >= 0, Euler transform first when c-a-b < 0).
  A pure direct-series-plus-acceleration route fails here for c-a-b <= 0,
  which does occur in scope (c-a-b = -1 for one needed family).
* z = 1: Gauss summation when c-a-b > 0.
* z > 1: only the boundary value from above the cut is defined
  (im_2f1_above_cut); the principal evaluation raises BranchPoint.

Terminating (polynomial) cases are summed directly for any z.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath as mp


class NoConvergence(ArithmeticError):
    pass


class BranchPoint(ValueError):
    """Evaluation at or beyond the branch point z = 1."""


class IntegerExponentDegenerate(ValueError):
    """c - a - b is an integer: the cut exponent degenerates and the two-part
    connection split does not apply."""


DEFAULT_DPS = 30
MAX_TERMS = 10**6


def _dps_for(tol: float) -> int:
    import math

    return max(DEFAULT_DPS, int(-math.log10(max(tol, 1e-200))) + 10)


def _is_nonpos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def _mpf(x: Fraction):
    return mp.mpf(x.numerator) / x.denominator


def _series(a: Fraction, b: Fraction, c: Fraction, z, tol):
    """Plain hypergeometric sum (used where convergence is geometric)."""
    am, bm, cm = _mpf(a), _mpf(b), _mpf(c)
    term = mp.mpf(1)
    total = mp.mpf(1)
    n = 0
    small = 0
    while n < MAX_TERMS:
        term *= (am + n) * (bm + n) / ((cm + n) * (n + 1)) * z
        total += term
        n += 1
        if abs(term) <= tol * max(abs(total), mp.mpf("1e-30")) / 4:
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NoConvergence(f"series did not converge in {MAX_TERMS} terms at z={z}")


def _terminating(a: Fraction, b: Fraction, c: Fraction, z):
    n_max = int(-a) if _is_nonpos_int(a) else int(-b)
    am, bm, cm = _mpf(a), _mpf(b), _mpf(c)
    term = mp.mpf(1)
    total = mp.mpf(1)
    for n in range(n_max):
        term *= (am + n) * (bm + n) / ((cm + n) * (n + 1)) * z
        total += term
    return total


def _near_one_noninteger(a: Fraction, b: Fraction, c: Fraction, z, tol):
    """DLMF 15.8.4: connection at 1-z, c-a-b not an integer."""
    w = 1 - z
    s = c - a - b
    c1 = mp.gamma(_mpf(c)) * mp.gamma(_mpf(s)) / (mp.gamma(_mpf(c - a)) * mp.gamma(_mpf(c - b)))
    c2 = mp.gamma(_mpf(c)) * mp.gamma(_mpf(-s)) / (mp.gamma(_mpf(a)) * mp.gamma(_mpf(b)))
    f1 = _series(a, b, a + b - c + 1, w, tol)
    f2 = _series(c - a, c - b, c - a - b + 1, w, tol)
    return c1 * f1 + c2 * mp.power(w, _mpf(s)) * f2


def _near_one_integer(a: Fraction, b: Fraction, c: Fraction, z, tol, m: int):
    """DLMF 15.8.10 (15.8.8 when m = 0): connection at 1-z, c-a-b = m >= 0."""
    w = 1 - z
    am, bm, cm = _mpf(a), _mpf(b), _mpf(c)
    total = mp.mpf(0)
    if m > 0:
        pre = mp.gamma(m) * mp.gamma(cm) / (mp.gamma(am + m) * mp.gamma(bm + m))
        term = mp.mpf(1)
        s0 = mp.mpf(0)
        for k in range(m):
            s0 += term
            if k < m - 1:
                term *= (am + k) * (bm + k) / ((k + 1) * (1 - m + k)) * w
        total += pre * s0
    # log part: -Gamma(c)/(Gamma(a)Gamma(b)) (z-1)^m sum_k coef_k w^k [bracket]
    logw = mp.log(w)
    pre2 = mp.gamma(cm) / (mp.gamma(am) * mp.gamma(bm)) * ((-1) ** m) * mp.power(w, m)
    coef = mp.mpf(1) / factorial(m)
    s1 = mp.mpf(0)
    small = 0
    k = 0
    while k < MAX_TERMS:
        bracket = (logw - mp.digamma(k + 1) - mp.digamma(k + m + 1)
                   + mp.digamma(am + k + m) + mp.digamma(bm + k + m))
        term = coef * bracket
        s1 += term
        coef *= (am + m + k) * (bm + m + k) / ((k + 1) * (k + m + 1)) * w
        k += 1
        scale = max(abs(total), abs(pre2 * s1), mp.mpf("1e-25"))
        if abs(pre2 * term) <= tol * scale / 8:
            small += 1
            if small >= 3:
                return total - pre2 * s1
        else:
            small = 0
    raise NoConvergence("logarithmic connection series did not converge")


def _eval(a: Fraction, b: Fraction, c: Fraction, z, tol):
    if z == 0:
        return mp.mpf(1)
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        return _terminating(a, b, c, z)
    if z > 1:
        raise BranchPoint(f"z={float(z)} is beyond the branch point; only "
                          "boundary values exist (see im_2f1_above_cut)")
    s = c - a - b
    if z == 1:
        if s <= 0:
            raise BranchPoint("series diverges at z=1 (c-a-b <= 0)")
        return (mp.gamma(_mpf(c)) * mp.gamma(_mpf(s))
                / (mp.gamma(_mpf(c - a)) * mp.gamma(_mpf(c - b))))
    if abs(z) <= 0.5:
        return _series(a, b, c, z, tol)
    if z < 0:
        # Pfaff: (1-z)^(-a) F(a, c-b; c; z/(z-1)); argument lands in (0, 1)
        return mp.power(1 - z, -_mpf(a)) * _eval(a, c - b, c, z / (z - 1), tol)
    # 1/2 < z < 1
    if s > 0 and 1 - z >= 0.25:
        return _series(a, b, c, z, tol)
    if s.denominator == 1:
        m = int(s)
        if m < 0:
            # Euler transform flips c-a-b to -m > 0
            return mp.power(1 - z, _mpf(s)) * _eval(c - a, c - b, c, z, tol)
        return _near_one_integer(a, b, c, z, tol, m)
    return _near_one_noninteger(a, b, c, z, tol)


def gauss_2f1(a, b, c, z, tol: float = 1e-12):
    """2F1(a,b;c;z) for real z < 1 (and z = 1 when the series converges
    there), to relative tolerance tol.  a, b, c are exact rationals."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if _is_nonpos_int(c):
        raise ValueError("c must not be a nonpositive integer")
    with mp.workdps(_dps_for(tol)):
        return +_eval(a, b, c, mp.mpf(z), mp.mpf(tol) / 4)


def gauss_2f1_deriv(a, b, c, z, tol: float = 1e-12):
    """d/dz 2F1(a,b;c;z) via the shifted-parameter series (not finite
    differences)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    with mp.workdps(_dps_for(tol)):
        fac = _mpf(a) * _mpf(b) / _mpf(c)
        return +(fac * _eval(a + 1, b + 1, c + 1, mp.mpf(z), mp.mpf(tol) / 4))


def im_2f1_above_cut(a, b, c, z, tol: float = 1e-12):
    """Imaginary part of 2F1(a,b;c;x+i0+) for x = z > 1.

    From the connection decomposition at the cut only the (1-z)^(c-a-b)
    factor is complex, with Im[(1-z)^s] = -sin(pi s)(z-1)^s from above; CAS
    conventions that take the limit from *below* the cut produce the
    opposite sign.  Requires c-a-b not an integer.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    s = c - a - b
    if s.denominator == 1:
        raise IntegerExponentDegenerate("c-a-b is an integer")
    if z <= 1:
        raise ValueError("need z > 1")
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        return mp.mpf(0)  # polynomial case: real on the cut
    with mp.workdps(_dps_for(tol)):
        zm = mp.mpf(z)
        coef = (mp.gamma(_mpf(c)) * mp.gamma(_mpf(a + b - c))
                / (mp.gamma(_mpf(a)) * mp.gamma(_mpf(b))))
        # w4 via the 1 - 1/z argument form, convergent for every z > 1
        inner = _eval(c - a, Fraction(1) - a, c - a - b + 1, 1 - 1 / zm, mp.mpf(tol) / 4)
        w4 = mp.power(zm, _mpf(a - c)) * inner
        return +(-coef * mp.sin(mp.pi * _mpf(s)) * mp.power(zm - 1, _mpf(s)) * w4)


def gamma_real(x, tol: float = 1e-12):
    """Gamma(x) for x > 0 to relative tolerance tol."""
    xf = Fraction(x) if not isinstance(x, float) else None
    with mp.workdps(_dps_for(tol)):
        xm = _mpf(xf) if xf is not None else mp.mpf(x)
        if xm <= 0:
            raise ValueError("x > 0 required")
        return +mp.gamma(xm)

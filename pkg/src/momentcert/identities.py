"""Catalog of exact series/operator identity checks.

Each identity is verified as an exact truncated (Laurent) series residual:
pass iff every computed coefficient vanishes.  Fractional-power factors are
expanded by exact rational binomial series; half-integer powers ride along
as even/odd powers of t = sqrt(x).  Operator coefficients are transcription
fixtures; small invariants (pullback targets, leading-term matches) are
re-derived in the tests to catch typos.

Identity ids (stable API for the CLI): letters "a".."p".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .dfinite import DiffOp, apply_op
from .exact import Poly, TruncSeries, rational_series, series_pow_rational
from .sequences import lis_bounded_counts


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class IdentityCheckReport:
    identity: str
    title: str
    order: int
    residual_norm: Fraction  # max |coefficient| of the residual (0 => pass)
    passed: bool
    seconds: float
    note: str = ""


F = Fraction


def _poly(*cs) -> Poly:
    return Poly.of(cs)


# --- fixture operators ------------------------------------------------------

# order-2 annihilator of the tail part (series minus polar part) of the
# LIS<=3 counting series, denominators cleared
LIS3_TAIL_OP = DiffOp.of([
    _poly(4, -9, 9),                               # 4 - 9x + 9x^2
    _poly(0, 5, -32, 27),                          # x(1-x)(5-27x)
    _poly(0, 0, 1, -10, 9),                        # x^2 (1-x)(1-9x)
])
LIS3_RAT = (Poly.of([1, 5]), Poly.of([0, 0, 6]))   # (1+5x) / 6x^2

# order-3 annihilator of the LIS<=4 tail, cleared by x^3 (1-16x)(1-4x)
LIS4_TAIL_OP = DiffOp.of([
    _poly(36, -80, 128),                           # 4(32x^2-20x+9)
    _poly(0, 44, -348, 640),                       # 4x(160x^2-87x+11)
    _poly(0, 0, 13, -182, 448),                    # x^2(448x^2-182x+13)
    _poly(0, 0, 0, 1, -20, 64),                    # x^3(1-16x)(1-4x)
])
LIS4_RAT = (Poly.of([1, 10, 18]), Poly.of([0, 0, 0, 12]))

# order-4 annihilator of the LIS<=5 tail
LIS5_TAIL_OP = DiffOp.of([
    _poly(-576, 1225, -2325, 900),
    _poly(0, -649, 5708, -14643, 7200),
    _poly(0, 0, -215, 3650, -14241, 8550),
    _poly(0, 0, 0, -26, 672, -3730, 2700),         # 2x^3(1350x^3-1865x^2+336x-13)
    _poly(0, 0, 0, 0, -1, 35, -259, 225),          # x^4(x-1)(9x-1)(25x-1)
])
LIS5_RAT = (Poly.of([1, 17, 71, 63]), Poly.of([0, 0, 0, 0, 20]))

# order-5 annihilator of the LIS<=6 tail
LIS6_TAIL_OP = DiffOp.of([
    _poly(-29160, 166912, -475344, 456192),
    _poly(0, -24740, 328808, -1374480, 1700352),   # 4x(425088x^3-343620x^2+82202x-6185)
    _poly(0, 0, -7144, 161288, -979176, 1527552),  # 8x^2(190944x^3-122397x^2+20161x-893)
    _poly(0, 0, 0, -898, 29648, -248860, 483840),  # 2x^3(241920x^3-124430x^2+14824x-449)
    _poly(0, 0, 0, 0, -50, 2212, -24464, 58752),   # 2x^4(29376x^3-12232x^2+1106x-25)
    _poly(0, 0, 0, 0, 0, -1, 56, -784, 2304),      # x^5(4x-1)(16x-1)(36x-1)
])
LIS6_RAT = (Poly.of([1, 26, 198, 476, 247]), Poly.of([0, 0, 0, 0, 0, 30]))

# order-6 annihilator of the LIS<=7 tail
LIS7_TAIL_OP = DiffOp.of([
    _poly(518400, -1002001, 2073337, -1887480, 396900),
    _poly(0, 483601, -4684008, 15390947, -21425184, 5953500),
    _poly(0, 0, 160367, -3329230, 19376513, -38766996, 13693050),
    _poly(0, 0, 0, 24770, -848520, 7858124, -21971032, 9724050),
    _poly(0, 0, 0, 0, 1913, -94818, 1273932, -4858886, 2679075),
    _poly(0, 0, 0, 0, 0, 71, -4704, 85686, -434024, 297675),
    _poly(0, 0, 0, 0, 0, 0, 1, -84, 1974, -12916, 11025),    # x^6(x-1)(9x-1)(25x-1)(49x-1)
])
LIS7_RAT = (Poly.of([1, 37, 447, 2079, 3348, 1160]), Poly.of([0, 0, 0, 0, 0, 0, 42]))

# order-2 operator whose square-of-solution carries the LIS<=5 structure,
# cleared by 4x^2(1-16x)(1-4x)
LIS5_SQROOT_OP = DiffOp.of([
    _poly(1, -8),
    _poly(0, 0, -40, 256),                         # 8x^2(32x-5)
    _poly(0, 0, 4, -80, 256),                      # 4x^2(1-16x)(1-4x)
])

# order-3 annihilator of the 4-step uniform planar walk distance density
WALK4_DENSITY_OP = DiffOp.of([
    _poly(-64, 0, 0, 0, 1),
    _poly(0, 64, 0, -32, 0, 7),
    _poly(0, 0, 0, 0, -60, 0, 6),                  # 6x^4(x^2-10)
    _poly(0, 0, 0, 64, 0, -20, 0, 1),              # x^3(x^2-4)(x^2-16)
])

# order-3 annihilator of (LIS<=4 density)(x^2)
LIS5_DENSITY_SQARG_OP = DiffOp.of([
    _poly(0, -192, 0, -96),                        # -96x(x^2+2)
    _poly(-64, 0, 16, 0, 51),
    _poly(0, 64, 0, 64, 0, -11),                   # -x(11x^4-64x^2-64)
    _poly(0, 0, 64, 0, -20, 0, 1),                 # x^2(x^2-4)(x^2-16)
])

def _build_intertwiner_x() -> DiffOp:
    """The order-2 intertwiner sending the walk-density solutions into the
    squared-argument density solutions has a simple pole in its order-0
    coefficient, so the stored fixture is x * (printed operator):

    x * [ x(x+4)(x-2)(x+2)(x-4)(x^4-590x^2-1376) D^2
          + (3x^8-1298x^6+11280x^4+10368x^2+38912) D
          + (x^8-382x^6+2208x^4-19072x^2-38912)/x ]
    """
    p2 = Poly.of([0, 1]) * Poly.of([4, 1]) * Poly.of([-2, 1]) * Poly.of([2, 1]) \
        * Poly.of([-4, 1]) * Poly.of([-1376, 0, -590, 0, 1])
    p2 = p2 * Poly.of([0, 1])
    p1 = Poly.of([38912, 0, 10368, 0, 11280, 0, -1298, 0, 3]) * Poly.of([0, 1])
    p0 = Poly.of([-38912, 0, -19072, 0, 2208, 0, -382, 0, 1])
    return DiffOp.of([p0, p1, p2])


WALK4_TO_LIS5_INTERTWINER_X = _build_intertwiner_x()


# --- series helpers ---------------------------------------------------------


def hyp_series(a: Fraction, b: Fraction, c: Fraction, u: TruncSeries) -> TruncSeries:
    """2F1(a,b;c; u(x)) as an exact truncated series (u(0) = 0)."""
    coeffs: dict[int, Fraction] = {}

    def coeff(n: int) -> Fraction:
        if n not in coeffs:
            if n == 0:
                coeffs[0] = F(1)
            else:
                prev = coeff(n - 1)
                coeffs[n] = prev * (a + n - 1) * (b + n - 1) / ((c + n - 1) * n)
        return coeffs[n]

    return u.compose_ps(coeff)


def pow_frac(p: Poly, e: Fraction, order: int) -> TruncSeries:
    """(polynomial)^e as an exact series (constant term must be positive
    with an exact rational root; here always 1)."""
    return series_pow_rational(TruncSeries.from_poly(p, order), e)


def ratio_series(num: Poly, den: Poly, order: int) -> TruncSeries:
    return rational_series(num, den, order)


def lis_series(k: int, order: int) -> TruncSeries:
    """sum_n f_{n,k} x^n to the given truncation order."""
    return TruncSeries.make(0, lis_bounded_counts(k, order), order)


def hook_length_counts(k: int, n_max: int) -> list[int]:
    """Independent oracle for f_{nk}: sum over partitions of n with at most
    k columns of the squared standard-tableau count (hook length formula)."""
    from math import factorial

    def partitions(n: int, max_part: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, max_part), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    out = []
    for n in range(n_max + 1):
        total = 0
        for lam in partitions(n, k):
            hooks = 1
            conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
            for i, row in enumerate(lam):
                for j in range(row):
                    hooks *= row - j + conj[j] - i - 1
            f_lam = factorial(n) // hooks
            total += f_lam * f_lam
        out.append(total)
    return out


def max_abs_coeff(s: TruncSeries) -> Fraction:
    return max((abs(c) for c in s.coeffs), default=F(0))


# --- the identity catalog ---------------------------------------------------


def _tail_annihilation(op: DiffOp, k: int, rat_num: Poly, rat_den: Poly,
                       order: int) -> TruncSeries:
    """Residual of op(F_k - rational polar part), as an exact Laurent series."""
    margin = op.order + rat_den.degree + 4
    f = lis_series(k, order + margin)
    tail = f - ratio_series(rat_num, rat_den, order + margin)
    return apply_op(op, tail).truncate(order)


def _check_a(order: int) -> TruncSeries:
    return _tail_annihilation(LIS3_TAIL_OP, 3, *LIS3_RAT, order=order)


def _check_b(order: int) -> TruncSeries:
    return _tail_annihilation(LIS4_TAIL_OP, 4, *LIS4_RAT, order=order)


def _check_c(order: int) -> TruncSeries:
    return _tail_annihilation(LIS5_TAIL_OP, 5, *LIS5_RAT, order=order)


def _check_d(order: int) -> TruncSeries:
    return _tail_annihilation(LIS6_TAIL_OP, 6, *LIS6_RAT, order=order)


def _check_e(order: int) -> TruncSeries:
    return _tail_annihilation(LIS7_TAIL_OP, 7, *LIS7_RAT, order=order)


def _check_f(order: int) -> TruncSeries:
    """Equality (up to the inherent factor 3) of the two reciprocal-variable
    expansions of the LIS<=3 tail: the dual-pullback transfer identity.

    Both sides carry a common irrational constant sqrt(3) after the branch
    constants are extracted; the residual below is the remaining exact
    rational-series identity.
    """
    n = order + 8
    one_m_y = Poly.of([1, -1])
    one_m_y9 = Poly.of([1, F(-1, 9)])
    # arguments of the two pullbacks, expanded at the reciprocal variable
    a_tilde = ratio_series(Poly.of([0, 0, 0, F(-64, 729)]),
                           one_m_y * one_m_y9 * one_m_y9 * one_m_y9, n)
    b_tilde = ratio_series(Poly.of([0, F(-64, 9)]),
                           one_m_y * one_m_y * one_m_y * one_m_y9, n)
    f1_a = hyp_series(F(-1, 4), F(3, 4), F(1), a_tilde)
    f1_b = hyp_series(F(-1, 4), F(3, 4), F(1), b_tilde)
    f2_b = hyp_series(F(-3, 4), F(7, 4), F(1), b_tilde)
    u = pow_frac(one_m_y, F(1, 4), n) * pow_frac(one_m_y9, F(3, 4), n)
    lhs = (u * f1_a).scale(F(3, 2))
    t1 = pow_frac(one_m_y9, F(1, 4), n) * pow_frac(one_m_y, F(-5, 4), n) \
        * f1_b.mul_poly(Poly.of([9, 6, 1])).scale(F(1, 6))
    t2 = pow_frac(one_m_y9, F(-3, 4), n) * pow_frac(one_m_y, F(-17, 4), n) \
        * f2_b.mul_poly(Poly.of([0, -3, -6, 1])).scale(F(-16, 9))
    return (lhs - t1 - t2).truncate(order)


def _mod13_pullbacks(order: int) -> tuple[TruncSeries, TruncSeries]:
    den_a = Poly.of([1, -1]) * Poly.of([1, -9]) * Poly.of([1, -9]) * Poly.of([1, -9])
    den_b = Poly.of([1, -1]) * Poly.of([1, -1]) * Poly.of([1, -1]) * Poly.of([1, -9])
    a = ratio_series(Poly.of([0, -64]), den_a, order)
    b = ratio_series(Poly.of([0, 0, 0, -64]), den_b, order)
    return a, b


def _check_g(order: int) -> TruncSeries:
    """Degree-3 modular-equation relation between the two cubic pullbacks."""
    a, b = _mod13_pullbacks(order + 4)
    ab = a * b
    s = a + b
    res = ab.pow_int(3).scale(4096) - (ab.pow_int(2) * s).scale(4608) \
        - a.pow_int(4) + (a.pow_int(3) * b).scale(900) - ab.pow_int(2).scale(28422) \
        + (a * b.pow_int(3)).scale(900) - b.pow_int(4) \
        - (ab * s).scale(4608) + ab.scale(4096)
    return res.truncate(order)


def _check_h(order: int) -> TruncSeries:
    """Degree-2 modular-equation relation between the two quadratic pullbacks."""
    n = order + 4
    a = ratio_series(Poly.of([0, 0, -108]),
                     Poly.of([1, -16]) * Poly.of([1, 2]) * Poly.of([1, 2]), n)
    b = ratio_series(Poly.of([0, 108]),
                     Poly.of([1, -4]) * Poly.of([1, 32]) * Poly.of([1, 32]), n)
    ab = a * b
    s = a + b
    res = ab.pow_int(3).scale(625) - (ab.pow_int(2) * s).scale(525) \
        - (ab * (a.pow_int(2).scale(32) + ab + b.pow_int(2).scale(32))).scale(3) \
        - (s * (a.pow_int(2) - ab.scale(133) + b.pow_int(2))).scale(4) \
        - ab.scale(432)
    return res.truncate(order)


def _check_i(order: int) -> TruncSeries:
    """Involutive symmetry of the weight-1 pullback form."""
    n = order + 6
    a, b = _mod13_pullbacks(n)
    fa = hyp_series(F(3, 4), F(3, 4), F(1), a)
    fb = hyp_series(F(3, 4), F(3, 4), F(1), b)
    lhs = (pow_frac(Poly.of([1, -9]), F(3, 2), n) * fb).mul_poly(Poly.of([1, -6, -3]))
    rhs = (pow_frac(Poly.of([1, -1]), F(3, 2), n) * fa).mul_poly(Poly.of([1, 18, -27]))
    return (lhs - rhs).truncate(order)


def _laurent_pullback_series(order: int) -> TruncSeries:
    """The Laurent tail form: -(1-x)^{1/4}(1-9x)^{3/4}/(6x^2) * F(-1/4,3/4;1;A)."""
    n = order + 8
    a, _ = _mod13_pullbacks(n)
    f = hyp_series(F(-1, 4), F(3, 4), F(1), a)
    pref = pow_frac(Poly.of([1, -1]), F(1, 4), n) * pow_frac(Poly.of([1, -9]), F(3, 4), n)
    return (pref * f).scale(F(-1, 6)).shift(-2)


def _check_j(order: int) -> TruncSeries:
    """First-order differential transfer between the two pullback forms
    (identity cleared by (1-9x))."""
    n = order + 8
    _, b = _mod13_pullbacks(n)
    fb = hyp_series(F(-1, 4), F(3, 4), F(1), b)
    lhs_core = pow_frac(Poly.of([1, -1]), F(3, 4), n) * pow_frac(Poly.of([1, -9]), F(1, 4), n) * fb
    lhs = lhs_core.mul_poly(Poly.of([0, F(-1, 2)]) * Poly.of([1, -9]))
    h = _laurent_pullback_series(n)
    rhs = (h.deriv().mul_poly(Poly.of([0, -8, 8])) + h.mul_poly(Poly.of([-13, 5]))).mul_poly(Poly.of([0, 0, 0, 1]))
    return (lhs - rhs).truncate(order)


def _check_k(order: int) -> TruncSeries:
    """Algebraic transfer between the quadratic pullback and the 4-step
    diamond-walk pullback."""
    n = order + 4
    arg1 = ratio_series(Poly.of([0, 0, -108]),
                        Poly.of([1, -16]) * Poly.of([1, 2]) * Poly.of([1, 2]), n)
    arg2 = ratio_series(Poly.of([0, 0, 108]),
                        Poly.of([1, -4]) * Poly.of([1, -4]) * Poly.of([1, -4]), n)
    lhs = pow_frac(Poly.of([1, -4]), F(1, 2), n) * hyp_series(F(1, 6), F(2, 3), F(1), arg1)
    rhs = pow_frac(Poly.of([1, -16]), F(1, 6), n) * pow_frac(Poly.of([1, 2]), F(1, 3), n) \
        * hyp_series(F(1, 6), F(1, 3), F(1), arg2)
    return (lhs - rhs).truncate(order)


def _sq_modform_series(n: int) -> TruncSeries:
    """x (1-16x)^{-1/3} (1+2x)^{-2/3} F(1/6,2/3;1;-108x^2/((1-16x)(1+2x)^2))^2."""
    arg = ratio_series(Poly.of([0, 0, -108]),
                       Poly.of([1, -16]) * Poly.of([1, 2]) * Poly.of([1, 2]), n)
    f = hyp_series(F(1, 6), F(2, 3), F(1), arg)
    pref = pow_frac(Poly.of([1, -16]), F(-1, 3), n) * pow_frac(Poly.of([1, 2]), F(-2, 3), n)
    return (pref * f * f).shift(1)


def _check_l(order: int) -> tuple[TruncSeries, Fraction]:
    """The second-order expression in the squared modular form reproduces the
    LIS<=4 series; the overall normalization of the squared form is fixed by
    the leading coefficient and reported."""
    n = order + 10
    F4 = lis_series(4, n)
    phi = _sq_modform_series(n)
    t = phi.deriv().deriv().mul_poly(
        Poly.of([-1, 4]) * Poly.of([-1, 16]) * Poly.of([-1, 590, 1376]).scale(-1) * Poly.of([0, 0, 1]))
    t = t + phi.deriv().mul_poly(Poly.of([1, -344, 396, 10304, 63488]).scale(-1) * Poly.of([0, 1]))
    t = t + phi.mul_poly(Poly.of([-1, 420, -3372, 2176]).scale(-1))
    rhs = (F4.mul_poly(Poly.of([0, 0, 0, 0, 0, 864]))
           - TruncSeries.from_poly(Poly.of([1, 10, 18]).scale(72) * Poly.of([0, 0, 1]), n))
    # rhs = c * t must hold; fix c from the first nonzero coefficient
    val = t.valuation()
    if val is None or rhs[val] == 0:
        c = F(0)
    else:
        c = rhs[val] / t[val]
    return (rhs - t.scale(c)).truncate(order), c


def _check_m(order: int) -> TruncSeries:
    """Toeplitz-determinant route vs. the tableau-pair (hook length) oracle,
    and the two printed low-rank determinant evaluations."""
    from math import factorial

    from .sequences import _bessel_like_t_series

    n_terms = min(order, 26)
    errs = []
    for k in (2, 3, 4):
        det_counts = lis_bounded_counts(k, n_terms)
        hook_counts = hook_length_counts(k, n_terms - 1)
        errs.extend(F(int(a) - int(b)) for a, b in zip(det_counts, hook_counts))
    # printed evaluations: det2 = I0^2 - I1^2 and the shifted cubic for det3
    t_order = 40
    i0 = _bessel_like_t_series(0, t_order)
    i1 = _bessel_like_t_series(1, t_order)
    i2 = _bessel_like_t_series(2, t_order)
    det2 = i0 * i0 - i1 * i1
    det3 = (i0 * (i0 * i0 - i1 * i1) - i1 * (i1 * i0 - i1 * i2)
            + i2 * (i1 * i1 - i0 * i2))
    disp2 = det2  # reference form is itself the definition here
    # (2 sqrt(x) I0^2 I1 - I0 I1^2 - 2 sqrt(x) I1^3)/x with sqrt(x) = t
    num = (i0 * i0 * i1).shift(1).scale(2) - i0 * i1 * i1 - (i1 * i1 * i1).shift(1).scale(2)
    disp3 = num.shift(-2)
    r2 = det2 - disp2
    r3 = (det3 - disp3).truncate(min(det3.order, disp3.order))
    coeffs = errs + list(r2.coeffs) + list(r3.coeffs)
    m = max((abs(c) for c in coeffs), default=F(0))
    return TruncSeries.make(0, [m], 1)


def _check_n(order: int) -> TruncSeries:
    """Ratio-series recursion for the quartic-root walk model: each iterate
    must satisfy its second-order differential equation."""
    from .sequences import walk_model_series

    n = order + 10
    b_prev = TruncSeries.from_poly(Poly.const(1), n)
    b_cur = walk_model_series(13, n)
    worst = F(0)
    for j in range(1, 7):
        # check the ODE for b_cur at index j ... cleared by x(1-6x)(1+2x)
        op = DiffOp.of([
            Poly.of([-2 * j * (2 * j + 1), -12 * j * (j + 1)]),
            Poly.of([2 * j, -(8 * j + 6), -24 * (j + 1)]),
            Poly.of([0, 1]) * Poly.of([1, -6]) * Poly.of([1, 2]),
        ])
        res = apply_op(op, b_cur).truncate(order)
        worst = max(worst, max_abs_coeff(res))
        # advance the recursion; the first level carries the odd head
        # coefficient 3 of the continued fraction, deeper levels carry 2
        gamma = 3 if j == 1 else 2
        nxt = (b_cur.mul_poly(Poly.of([1, -gamma])) - b_prev) \
            .scale(F((2 * j - 1) * (2 * j + 1), (4 * j - 1) * (4 * j + 1)))
        nxt = nxt.shift(-2)
        b_prev, b_cur = b_cur, nxt
    return TruncSeries.make(0, [worst], 1)


def _check_o(order: int) -> TruncSeries:
    """The two closed forms of the weight-1 modular object agree as series
    (common sqrt(x) prefactor dropped)."""
    n = order + 4
    arg1 = ratio_series(Poly.of([0, 0, -108]),
                        Poly.of([1, -16]) * Poly.of([1, 2]) * Poly.of([1, 2]), n)
    arg2 = ratio_series(Poly.of([0, 108]),
                        Poly.of([1, -4]) * Poly.of([1, 32]) * Poly.of([1, 32]), n)
    lhs = pow_frac(Poly.of([1, -16]), F(-1, 6), n) * pow_frac(Poly.of([1, 2]), F(-1, 3), n) \
        * hyp_series(F(1, 6), F(2, 3), F(1), arg1)
    rhs = pow_frac(Poly.of([1, -4]), F(-1, 6), n) * pow_frac(Poly.of([1, 32]), F(-1, 3), n) \
        * hyp_series(F(1, 6), F(2, 3), F(1), arg2)
    return (lhs - rhs).truncate(order)


def _check_p(order: int) -> float:
    """Telescoping certificate spot check for the semicircle-type integrand:
    (n+2) U(n+1,x) - (4n+2) U(n,x) = d/dx [ x(x-4) U(n,x) ],
    U(n,x) = x^n sqrt((4-x)/x), at 20 pseudo-random (n, x)."""
    import math
    import random

    rng = random.Random(20160309)
    worst = 0.0
    for _ in range(20):
        n = rng.randint(0, 12)
        x = rng.uniform(0.05, 3.95)
        u = x**n * math.sqrt((4 - x) / x)
        u1 = x ** (n + 1) * math.sqrt((4 - x) / x)
        lhs = (n + 2) * u1 - (4 * n + 2) * u
        rhs = 1.5 * math.sqrt(4 - x) * x ** (n + 0.5) \
            - (n + 0.5) * (4 - x) ** 1.5 * x ** (n - 0.5)
        scale = max(abs(lhs), abs(rhs), 1.0)
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst


_CATALOG: dict[str, tuple[str, Callable]] = {
    "a": ("order-2 annihilator kills the LIS<=3 series minus its polar part", _check_a),
    "b": ("order-3 annihilator kills the LIS<=4 series minus its polar part", _check_b),
    "c": ("order-4 annihilator kills the LIS<=5 series minus its polar part", _check_c),
    "d": ("order-5 annihilator kills the LIS<=6 series minus its polar part", _check_d),
    "e": ("order-6 annihilator kills the LIS<=7 series minus its polar part", _check_e),
    "f": ("dual-pullback transfer identity at the reciprocal variable (factor 3)", _check_f),
    "g": ("cubic-pullback modular equation", _check_g),
    "h": ("quadratic-pullback fundamental modular equation", _check_h),
    "i": ("involutive symmetry of the weight-1 pullback form", _check_i),
    "j": ("first-order differential transfer between the two pullback forms", _check_j),
    "k": ("algebraic transfer to the diamond-walk pullback", _check_k),
    "l": ("second-order expression in the squared modular form reproduces LIS<=4", _check_l),
    "m": ("Toeplitz determinant route vs tableau-pair oracle + printed forms", _check_m),
    "n": ("ratio-series recursion solves its differential equation (6 levels)", _check_n),
    "o": ("two closed forms of the weight-1 modular object agree", _check_o),
    "p": ("telescoping certificate spot check (numeric)", _check_p),
}


def identity_ids() -> list[str]:
    return sorted(_CATALOG)


def check_identity(identity: str, order: int = 40) -> IdentityCheckReport:
    """Run one identity check; the report's residual_norm is the largest
    residual coefficient (exact zero required to pass, except the numeric
    spot check p which passes at 1e-10)."""
    if identity not in _CATALOG:
        raise UnknownIdentity(identity)
    if order < 10:
        raise ValueError("order >= 10")
    title, fn = _CATALOG[identity]
    t0 = time.time()
    note = ""
    if identity == "p":
        worst = fn(order)
        passed = worst <= 1e-10
        residual = F(1) if not passed else F(0)
        note = f"max relative residual {worst:.2e}"
    elif identity == "l":
        res, c = fn(order)
        residual = max_abs_coeff(res)
        passed = residual == 0
        note = f"normalization constant fixed from the leading coefficient: c = {c}"
    else:
        res = fn(order)
        residual = max_abs_coeff(res)
        passed = residual == 0
    return IdentityCheckReport(identity, title, order, residual, passed,
                               time.time() - t0, note)


def check_all(order: int = 40, order_overrides: Optional[dict] = None) -> list[IdentityCheckReport]:
    overrides = {"a": 60}
    if order_overrides:
        overrides.update(order_overrides)
    return [check_identity(i, overrides.get(i, order)) for i in identity_ids()]

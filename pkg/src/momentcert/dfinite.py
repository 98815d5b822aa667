"""Linear differential operators with exact polynomial coefficients.

Operators act on truncated Laurent series; everything is exact rational
arithmetic (the identity checks downstream involve operators with huge
integer coefficients, where floating arithmetic would be inconclusive).
Coefficients may temporarily be Laurent polynomials (pairs of a shift and a
Poly) during pullback construction; public operators always carry plain
polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence

from .exact import Poly, TruncSeries


class InsufficientOrder(ValueError):
    pass


class SingularPoint(ValueError):
    pass


@dataclass(frozen=True)
class DiffOp:
    """sum_i coeffs[i] * D^i with polynomial coefficients; coeffs[-1] != 0."""

    coeffs: tuple  # tuple of Poly, index = derivative order

    @staticmethod
    def of(polys: Sequence) -> "DiffOp":
        ps = [p if isinstance(p, Poly) else Poly.of(p) for p in polys]
        while ps and ps[-1].is_zero():
            ps.pop()
        if not ps:
            raise ValueError("zero operator")
        return DiffOp(tuple(ps))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def scale(self, c) -> "DiffOp":
        return DiffOp.of([p.scale(c) for p in self.coeffs])

    def normalized(self) -> "DiffOp":
        """Primitive integer-coefficient form with positive leading content,
        for comparisons up to a rational factor."""
        den = 1
        for p in self.coeffs:
            for c in p.coeffs:
                den = lcm(den, c.denominator)
        g = 0
        for p in self.coeffs:
            for c in p.coeffs:
                g = gcd(g, abs(int(c * den)))
        g = g or 1
        lead = None
        for c in reversed(self.coeffs[-1].coeffs):
            if c != 0:
                lead = c
                break
        sign = -1 if lead < 0 else 1
        return DiffOp.of([p.scale(Fraction(sign * den, g)) for p in self.coeffs])


def apply_op(op: DiffOp, s: TruncSeries) -> TruncSeries:
    """sum_i coeffs[i] * s^(i), with the truncation window tracked exactly."""
    if s.order - s.low <= op.order:
        raise InsufficientOrder("series window shorter than the operator order")
    deriv = s
    total = None
    for i, p in enumerate(op.coeffs):
        if i > 0:
            deriv = deriv.deriv()
        if p.is_zero():
            continue
        term = deriv.mul_poly(p)
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# Operator algebra on Laurent-polynomial coefficients
# ---------------------------------------------------------------------------

# A Laurent coefficient is (shift, Poly) meaning x^shift * Poly.


def _lmul(a, b):
    return (a[0] + b[0], a[1] * b[1])


def _ladd(a, b):
    sh = min(a[0], b[0])
    pa = Poly.of([0] * (a[0] - sh) + list(a[1].coeffs))
    pb = Poly.of([0] * (b[0] - sh) + list(b[1].coeffs))
    return (sh, pa + pb)


def _lderiv(a):
    # d/dx (x^s p) = s x^(s-1) p + x^s p'
    s, p = a
    term1 = (s - 1, p.scale(s)) if s != 0 else None
    term2 = (s, p.deriv())
    if term1 is None:
        return term2
    if term2[1].is_zero():
        return term1
    return _ladd(term1, term2)


def _op_mul_laurent(a_ops, b_ops):
    """Composition (a after b) of operators with Laurent coefficients.
    D^i . f = sum_k C(i,k) f^(k) D^(i-k)."""
    out: dict[int, tuple] = {}
    for i, ai in enumerate(a_ops):
        if ai is None:
            continue
        for j, bj in enumerate(b_ops):
            if bj is None:
                continue
            fk = bj
            for k in range(i + 1):
                coeff = (_lmul(ai, fk)[0], _lmul(ai, fk)[1].scale(comb(i, k)))
                idx = i - k + j
                out[idx] = _ladd(out[idx], coeff) if idx in out else coeff
                if k < i:
                    fk = _lderiv(fk)
    n = max(out) if out else 0
    return [out.get(i) for i in range(n + 1)]


def pullback_inverse(op: DiffOp) -> DiffOp:
    """The operator (in the reciprocal variable) annihilating y^{-1} f(1/y)
    whenever op annihilates f(x).

    Construction: substitute x -> 1/y and D_x -> -y^2 D_y by the chain rule,
    then conjugate by right-multiplication with y, and clear the Laurent
    coefficients to plain polynomials.
    """
    # (-y^2 D_y)^i as Laurent-coefficient operators, built iteratively
    d_pow = [[(0, Poly.const(1))]]  # identity
    for _ in range(op.order):
        prev = d_pow[-1]
        # multiply on the left by (-y^2 D): -y^2 * d/dy(prev terms) shift
        step = _op_mul_laurent([None, (2, Poly.const(-1))], prev)
        d_pow.append(step)

    acc: list = []
    for i, p in enumerate(op.coeffs):
        if p.is_zero():
            continue
        # p(1/y) = y^{-deg} * reversed(p)
        deg = p.degree
        rev = Poly.of(list(reversed(p.coeffs)))
        li = (-deg, rev)
        term = [None if c is None else _lmul(li, c) for c in d_pow[i]]
        # accumulate
        n = max(len(acc), len(term))
        new = []
        for k in range(n):
            a = acc[k] if k < len(acc) else None
            b = term[k] if k < len(term) else None
            if a is None:
                new.append(b)
            elif b is None:
                new.append(a)
            else:
                new.append(_ladd(a, b))
        acc = new
    # right-multiply by y (multiplication operator)
    acc = _op_mul_laurent(acc, [(1, Poly.const(1))])
    # clear negative shifts
    min_shift = min(c[0] for c in acc if c is not None)
    lift = max(0, -min_shift)
    polys = []
    for c in acc:
        if c is None:
            polys.append(Poly(()))
        else:
            sh, p = c
            polys.append(Poly.of([0] * (sh + lift) + list(p.coeffs)))
    return DiffOp.of(polys).normalized()


def local_solutions(op: DiffOp, x0, order: int) -> list[TruncSeries]:
    """Full basis of power-series solutions at an ordinary point x0,
    exact, each delivered to the given truncation order (in t = x - x0)."""
    x0 = Fraction(x0)
    r = op.order
    shifted = [p.shift(x0) for p in op.coeffs]
    if shifted[-1].eval(0) == 0:
        raise SingularPoint(f"leading coefficient vanishes at {x0}")
    basis = []
    for which in range(r):
        c = [Fraction(0)] * order
        if which < order:
            c[which] = Fraction(1)
        # solve coefficient m + r from rows m = 0, 1, ...
        for m in range(order - r):
            # coefficient of t^m in sum_i p_i(t) s^(i)(t):
            #   sum_i sum_j p_{i,j} c_{m-j+i} (m-j+i)! / (m-j)!
            # unknown: c_{m+r} via i = r, j = 0
            s = Fraction(0)
            lead = None
            for i, p in enumerate(shifted):
                for j, pj in enumerate(p.coeffs):
                    if pj == 0:
                        continue
                    idx = m - j + i
                    if idx < 0 or idx >= order:
                        continue
                    fall = Fraction(1)
                    for t in range(i):
                        fall *= idx - t
                    if fall == 0:
                        continue
                    if idx == m + r and i == r and j == 0:
                        lead = pj * fall
                        continue
                    s += pj * fall * c[idx]
            if lead is None:
                raise SingularPoint("recurrence lost its leading term")
            if m + r < order:
                c[m + r] = -s / lead
        basis.append(TruncSeries.make(0, c, order))
    return basis


def gauge_equiv_check(src: DiffOp, intertwiner: DiffOp, dst: DiffOp,
                      x0, order: int) -> bool:
    """True iff the intertwiner maps every local solution of src at x0 to a
    solution of dst, verified on exact truncated series through the given
    order."""
    work = order + src.order + intertwiner.order + dst.order + 4
    basis = local_solutions(src, x0, work)
    x0 = Fraction(x0)
    inter_sh = DiffOp.of([p.shift(x0) for p in intertwiner.coeffs])
    dst_sh = DiffOp.of([p.shift(x0) for p in dst.coeffs])
    for s in basis:
        image = apply_op(inter_sh, s)
        res = apply_op(dst_sh, image)
        if any(res[n] != 0 for n in range(min(order, res.order))):
            return False
    return True

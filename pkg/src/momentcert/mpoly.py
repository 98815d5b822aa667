"""Sparse multivariate polynomials over Q and Sylvester resultants.

Only the small-variable regime needed here (the (x, u, v) split of the
algebraic density route); monomials are exponent tuples.  The resultant is
the literal Sylvester determinant with the rows of the first argument's
block on top, computed by division-free Laplace expansion with memoization
on column subsets.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

Mono = Tuple[int, ...]
MPoly = Dict[Mono, Fraction]


def mp_zero() -> MPoly:
    return {}


def mp_const(nvars: int, c) -> MPoly:
    c = Fraction(c)
    return {} if c == 0 else {(0,) * nvars: c}


def mp_var(nvars: int, idx: int) -> MPoly:
    e = [0] * nvars
    e[idx] = 1
    return {tuple(e): Fraction(1)}


def mp_add(a: MPoly, b: MPoly) -> MPoly:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, Fraction(0)) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def mp_neg(a: MPoly) -> MPoly:
    return {m: -c for m, c in a.items()}


def mp_sub(a: MPoly, b: MPoly) -> MPoly:
    return mp_add(a, mp_neg(b))


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    out: MPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, Fraction(0)) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def mp_scale(a: MPoly, c) -> MPoly:
    c = Fraction(c)
    return {} if c == 0 else {m: cc * c for m, cc in a.items()}


def mp_degree_in(a: MPoly, var: int) -> int:
    """Degree in one variable; -1 for the zero polynomial."""
    return max((m[var] for m in a), default=-1)


def mp_coeff_in(a: MPoly, var: int, k: int) -> MPoly:
    """Coefficient of var^k: a polynomial in the remaining variables (the
    eliminated slot is kept with exponent 0)."""
    out: MPoly = {}
    for m, c in a.items():
        if m[var] == k:
            mm = list(m)
            mm[var] = 0
            out[tuple(mm)] = c
    return out


def mp_subst_linear(a: MPoly, var: int, repl: MPoly) -> MPoly:
    """Substitute repl for the given variable (Horner in that variable)."""
    d = mp_degree_in(a, var)
    if d <= 0:
        return dict(a)
    acc = mp_coeff_in(a, var, d)
    for k in range(d - 1, -1, -1):
        acc = mp_add(mp_mul(acc, repl), mp_coeff_in(a, var, k))
    return acc


def _det_laplace(rows: list[list[MPoly]]) -> MPoly:
    """Division-free determinant by Laplace expansion along the first rows,
    memoized on the set of remaining columns."""
    n = len(rows)
    nvars = None
    for row in rows:
        for e in row:
            if e:
                nvars = len(next(iter(e)))
                break
        if nvars is not None:
            break
    if nvars is None:
        return {}
    memo: dict[tuple[int, ...], MPoly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> MPoly:
        if r == n:
            return mp_const(nvars, 1)
        if cols in memo:
            return memo[cols]
        acc: MPoly = {}
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if not entry:
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            term = mp_mul(entry, sub)
            acc = mp_add(acc, term if pos % 2 == 0 else mp_neg(term))
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


def resultant(p: MPoly, q: MPoly, var: int) -> MPoly:
    """Sylvester resultant of p and q w.r.t. one variable.

    Convention: the literal Sylvester determinant with the p-coefficient
    rows first, then the q rows; coefficients ordered from the leading
    power of the eliminated variable downward.
    """
    dp, dq = mp_degree_in(p, var), mp_degree_in(q, var)
    if dp < 0 or dq < 0:
        raise ValueError("resultant of a zero polynomial")
    if dp == 0 and dq == 0:
        raise ValueError("both inputs are constant in the eliminated variable")
    n = dp + dq
    pc = [mp_coeff_in(p, var, dp - k) for k in range(dp + 1)]
    qc = [mp_coeff_in(q, var, dq - k) for k in range(dq + 1)]
    rows: list[list[MPoly]] = []
    for i in range(dq):
        rows.append([mp_zero()] * i + pc + [mp_zero()] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([mp_zero()] * i + qc + [mp_zero()] * (n - dq - 1 - i))
    return _det_laplace(rows)


def mp_eval(a: MPoly, point: tuple) -> Fraction:
    vals = [Fraction(v) for v in point]
    out = Fraction(0)
    for m, c in a.items():
        t = c
        for e, v in zip(m, vals):
            t *= v**e
        out += t
    return out


def mp_equal_up_to_factor(a: MPoly, b: MPoly) -> bool:
    """True iff a = r * b for some nonzero rational r."""
    if not a or not b:
        return not a and not b
    m0 = next(iter(sorted(b)))
    if m0 not in a:
        return False
    r = a[m0] / b[m0]
    return a == mp_scale(b, r)

"""Hankel-minor computation and moment-sequence classification.

A finite prefix can only ever certify *consistency* with the Stieltjes or
Hamburger property (finitely many nonnegative minors never prove it), so
verdicts are explicitly prefix-consistent.  Total nonnegativity (all minors)
is deliberately not checked exhaustively - exponentially many minors; the
leading-principal-minor route is the certification path, with a random
3x3-minor sampler as an auxiliary diagnostic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import RatMatrix, det_bareiss, hankel_matrix
from .sequences import MomentSeq


class InsufficientTerms(ValueError):
    pass


STIELTJES_CONSISTENT = "StieltjesConsistent"
HAMBURGER_ONLY_CONSISTENT = "HamburgerOnlyConsistent"
NOT_HAMBURGER = "NotHamburger"


@dataclass(frozen=True)
class HankelReport:
    delta0: tuple
    delta1: tuple
    verdict: str
    first_violation: Optional[tuple]  # (shift, n) of the first negative minor
    note: str = "prefix-consistent verdict: computed from finitely many terms, not a proof"


def minors(seq: MomentSeq, shift: int, n_max: int) -> list[Fraction]:
    """Leading principal minors Delta_shift^1 .. Delta_shift^{n_max}, exact."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    if len(seq.terms) < 2 * n_max - 1 + shift:
        raise InsufficientTerms(
            f"need {2 * n_max - 1 + shift} terms for n_max={n_max}, have {len(seq.terms)}")
    return [det_bareiss(hankel_matrix(seq.terms, shift, n)) for n in range(1, n_max + 1)]


def max_minor_depth(n_terms: int, shift: int) -> int:
    return max((n_terms - shift + 1) // 2, 0)


def classify(seq: MomentSeq) -> HankelReport:
    """Classify the sequence prefix: Stieltjes-consistent, Hamburger-only
    consistent, or not a Hamburger prefix at all."""
    if len(seq.terms) < 3:
        raise InsufficientTerms("need at least 3 terms")
    d0 = minors(seq, 0, max_minor_depth(len(seq.terms), 0))
    d1 = minors(seq, 1, max_minor_depth(len(seq.terms), 1))
    first = None
    for n, v in enumerate(d0, start=1):
        if v < 0:
            first = (0, n)
            break
    for n, v in enumerate(d1, start=1):
        if v < 0 and (first is None or n < first[1]):
            first = (1, n)
    if any(v < 0 for v in d0):
        verdict = NOT_HAMBURGER
    elif all(v >= 0 for v in d1):
        verdict = STIELTJES_CONSISTENT
    else:
        verdict = HAMBURGER_ONLY_CONSISTENT
    return HankelReport(tuple(d0), tuple(d1), verdict, first)


def check_minor_alpha(seq: MomentSeq, alphas, n_max: int) -> bool:
    """Verify the product formulas tying Hankel minors to the S-fraction
    coefficients:

        Delta_0^n = a0^n (a1 a2)^{n-1} (a3 a4)^{n-2} ... (a_{2n-3} a_{2n-2})
        Delta_1^n = a0^n a1^n (a2 a3)^{n-1} ... (a_{2n-2} a_{2n-1})
    """
    al = list(getattr(alphas, "alphas", alphas))
    need = 2 * n_max - 1
    if len(al) < need + 1:
        n_max = (len(al) + 1) // 2
    d0 = minors(seq, 0, n_max)
    d1 = minors(seq, 1, n_max)
    for n in range(1, n_max + 1):
        p0 = al[0] ** n
        for j in range(1, n):
            p0 *= (al[2 * j - 1] * al[2 * j]) ** (n - j)
        p1 = al[0] ** n * al[1] ** n
        for j in range(1, n):
            p1 *= (al[2 * j] * al[2 * j + 1]) ** (n - j)
        if d0[n - 1] != p0 or d1[n - 1] != p1:
            return False
    return True


def sample_random_minors(seq: MomentSeq, size: int = 3, trials: int = 25,
                         rng: random.Random | None = None) -> list[Fraction]:
    """Auxiliary diagnostic: determinants of random size x size (non-principal)
    minors of the shift-0 Hankel matrix."""
    rng = rng or random.Random(0)
    n_terms = len(seq.terms)
    top = (n_terms - 1) // 2
    if top < size:
        raise InsufficientTerms("prefix too short for the requested minor size")
    out = []
    for _ in range(trials):
        rows = sorted(rng.sample(range(top), size))
        cols = sorted(rng.sample(range(top), size))
        m = RatMatrix.of([[seq.terms[i + j] for j in cols] for i in rows])
        out.append(det_bareiss(m))
    return out


# ---------------------------------------------------------------------------
# Walk-model closed forms
# ---------------------------------------------------------------------------


class ClosedFormMismatch(AssertionError):
    def __init__(self, model: int, n: int, what: str):
        self.model, self.n = model, n
        super().__init__(f"walk model {model}: {what} fails at n={n}")


@dataclass(frozen=True)
class WalkClosedFormReport:
    model: int
    q: Optional[Fraction]  # None for model 13
    delta0: tuple
    u: tuple  # Delta_1^n / Delta_0^n
    recurrence: Optional[tuple]  # constant coefficients (c_1..c_m): u_{n+m} = sum c_i u_{n+m-i}
    ok: bool


def _fit_constant_recurrence(u: list[Fraction], max_order: int = 3):
    """Smallest-order constant-coefficient linear recurrence satisfied by all
    of u, or None."""
    from .linalg import SingularSystem, solve_exact

    for m in range(1, max_order + 1):
        if len(u) < 2 * m:
            return None
        rows = [[u[n + m - 1 - j] for j in range(m)] for n in range(m)]
        rhs = [u[n + m] for n in range(m)]
        try:
            coeffs = solve_exact(RatMatrix.of(rows), rhs)
        except SingularSystem:
            continue
        if all(sum(coeffs[j] * u[n + m - 1 - j] for j in range(m)) == u[n + m]
               for n in range(len(u) - m)):
            return tuple(coeffs)
    return None


def _aqt_product(n: int) -> Fraction:
    """Closed form for the model-13 shift-0 minors:
    (-4)^C(n,2) * prod_{i,j<=n} (4(j-i)+1)/(j-i+n)."""
    from math import comb

    p = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            p *= Fraction(4 * (j - i) + 1, j - i + n)
    return Fraction(-4) ** comb(n, 2) * p


def check_walk_closed_forms(model: int, n_max: int) -> WalkClosedFormReport:
    """Verify the closed-form Hankel evaluations of one walk model.

    Models 1-12: Delta_0^n = q^C(n,2) with q = Delta_0^2, and
    u_n = Delta_1^n/Delta_0^n satisfies a constant-coefficient linear
    recurrence of order <= 3 found by exact fitting.  Model 13: Delta_0^n
    matches the quarter-turn-symmetric ASM product formula and u satisfies
    u_{n+2} = 2u_{n+1} - ((4n+9)(4n+7)/((2n+5)(2n+3))) u_n.
    """
    from math import comb

    from .sequences import generate

    seq = generate(f"walk{model}", 2 * n_max + 1)
    d0 = minors(seq, 0, n_max)
    d1 = minors(seq, 1, n_max)
    u = [d1[i] / d0[i] for i in range(n_max)]
    if model <= 12:
        q = d0[1] if n_max >= 2 else Fraction(1)
        for n in range(1, n_max + 1):
            if d0[n - 1] != q ** comb(n, 2):
                raise ClosedFormMismatch(model, n, "Delta_0 power law")
        rec = _fit_constant_recurrence(u)
        if rec is None:
            raise ClosedFormMismatch(model, n_max, "no constant-coefficient u recurrence of order <= 3")
        return WalkClosedFormReport(model, q, tuple(d0), tuple(u), rec, True)
    # model 13
    for n in range(1, n_max + 1):
        if d0[n - 1] != _aqt_product(n):
            raise ClosedFormMismatch(13, n, "Delta_0 product formula")
    # u_{n+2} = 2 u_{n+1} - ((4n+9)(4n+7)/((2n+5)(2n+3))) u_n  (u_0 = u at n=1 here)
    for n in range(n_max - 2):
        coeff = Fraction((4 * n + 9) * (4 * n + 7), (2 * n + 5) * (2 * n + 3))
        if u[n + 2] != 2 * u[n + 1] - coeff * u[n]:
            raise ClosedFormMismatch(13, n, "u recurrence")
    return WalkClosedFormReport(13, None, tuple(d0), tuple(u), None, True)

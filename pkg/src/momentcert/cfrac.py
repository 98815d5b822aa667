"""Continued-fraction extraction (exact) and growth-constant lower bounds.

S-fraction coefficients come from the quotient-difference scheme run in
exact rational arithmetic (floating QD is unstable, and the bound claims
live in the 2nd-3rd decimal).  J-fraction coefficients come from the exact
three-term recurrence of monic orthogonal polynomials (Chebyshev-style
moment algorithm).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from typing import Optional

from .exact import Poly, TruncSeries
from .roots import smallest_positive_root
from .sequences import MomentSeq


class ZeroDivisorError(ArithmeticError):
    """A quotient-difference denominator vanished: the sequence has no
    S-fraction past this depth."""

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"QD scheme hit a zero divisor at level {level}")


class ZeroHankelMinor(ArithmeticError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"vanishing Hankel minor blocks J-fraction extraction at n={n}")


class NegativeAlpha(ValueError):
    """Growth bounds are inapplicable: an S-fraction coefficient is negative."""


@dataclass(frozen=True)
class SFrac:
    """S-fraction coefficient vector: a(x) = alphas[0] / (1 - alphas[1] x / (1 - ...)).

    The list may be shorter than requested when extraction halts (zero QD
    denominator); ``halted_at`` records that level if so.
    """

    alphas: tuple
    halted_at: Optional[int] = None

    def __len__(self) -> int:
        return len(self.alphas)

    def __getitem__(self, i: int) -> Fraction:
        return self.alphas[i]


@dataclass(frozen=True)
class JFrac:
    """J-fraction coefficients: a(x) = a0 / (1 - gammas[0] x - betas[0] x^2 / (1 - ...)).

    ``betas[i]`` is the level-(i+1) coefficient, so len(betas) = len(gammas) - 1.
    """

    gammas: tuple
    betas: tuple

    def __post_init__(self):
        if len(self.betas) != max(len(self.gammas) - 1, 0):
            raise ValueError("betas must pair levels 1..len(gammas)-1")


@dataclass(frozen=True)
class BoundsReport:
    ratio_bound: float
    truncated_cf_bounds: tuple  # mu_n, n = 1..
    monotone_tail_bounds: tuple  # (sqrt(a_n) + sqrt(a_{n-1}))^2, n = 1..
    assumptions: dict = field(default_factory=dict, compare=False)

    @property
    def best_truncated(self) -> float:
        return max(self.truncated_cf_bounds)

    @property
    def best_monotone(self) -> float:
        return max(self.monotone_tail_bounds)


# ---------------------------------------------------------------------------
# S-fraction
# ---------------------------------------------------------------------------


def extract_sfrac(seq: MomentSeq, strict: bool = False) -> SFrac:
    """Quotient-difference extraction of the maximal S-fraction prefix.

    With strict=True a vanishing QD denominator raises ZeroDivisorError;
    otherwise extraction halts there and returns the coefficients found.
    """
    c = list(seq.terms)
    if not c or c[0] == 0:
        raise ValueError("a_0 must be nonzero")
    N = len(c) - 1
    alphas = [Fraction(c[0])]
    halted = None
    try:
        if any(v == 0 for v in c[:-1]) and N >= 1:
            # q-column needs nonzero consecutive terms
            first = next(i for i, v in enumerate(c[:-1]) if v == 0)
            raise ZeroDivisorError(first)
        q = [Fraction(c[i + 1], c[i]) for i in range(N)]  # q_1^{(i)}
        e_prev = [Fraction(0)] * (N + 1)  # e_0^{(i)}
        k = 1
        while True:
            if q:
                alphas.append(q[0])  # alpha_{2k-1}
            else:
                break
            # e_k^{(i)} = q_k^{(i+1)} - q_k^{(i)} + e_{k-1}^{(i+1)}
            e = [q[i + 1] - q[i] + e_prev[i + 1] for i in range(len(q) - 1)]
            if not e:
                break
            alphas.append(e[0])  # alpha_{2k}
            # q_{k+1}^{(i)} = q_k^{(i+1)} e_k^{(i+1)} / e_k^{(i)}
            q_next = []
            for i in range(len(e) - 1):
                if e[i] == 0:
                    raise ZeroDivisorError(2 * k + 1)
                q_next.append(q[i + 1] * e[i + 1] / e[i])
            q, e_prev = q_next, e
            k += 1
    except ZeroDivisorError as exc:
        if strict:
            raise
        halted = exc.level
    return SFrac(tuple(alphas), halted)


def _sfrac_convergent_denominator(alphas, n: int) -> Poly:
    """Denominator polynomial of the depth-n truncation (levels alpha_1..alpha_n
    kept, deeper tail set to 0)."""
    k_prev, k_cur = Poly.const(1), Poly.const(1)
    for j in range(1, n + 1):
        k_next = k_cur - Poly.of([0, alphas[j]]) * k_prev
        k_prev, k_cur = k_cur, k_next
    return k_cur


def sfrac_to_series(cf: SFrac, n_terms: int) -> TruncSeries:
    """Taylor expansion of the finite continued fraction (tail zero)."""
    al = cf.alphas
    # continuant recurrence with partial numerators (-alpha_j x), denominators 1
    h_list = [Poly.const(0), Poly.const(1)]
    k_list = [Poly.const(1), Poly.const(1)]
    for j in range(1, len(al)):
        a_j = Poly.of([0, -al[j]])
        h_list.append(h_list[-1] + a_j * h_list[-2])
        k_list.append(k_list[-1] + a_j * k_list[-2])
    num, den = h_list[-1], k_list[-1]
    from .exact import rational_series

    return rational_series(num, den, n_terms).scale(al[0])


def extract_jfrac(seq: MomentSeq) -> JFrac:
    """J-fraction coefficients via the exact moment (Chebyshev) algorithm for
    the monic orthogonal-polynomial three-term recurrence."""
    m = list(seq.terms)
    if not m or m[0] == 0:
        raise ValueError("a_0 must be nonzero")
    sigma_prev = None
    sigma = [Fraction(v) for v in m]
    gammas: list[Fraction] = []
    betas: list[Fraction] = []
    k = 0
    while True:
        # row k holds valid entries at positions k .. len(sigma)-1;
        # the gamma/beta formulas need sigma[k] and sigma[k+1]
        if len(sigma) - k < 2:
            break
        if sigma[k] == 0:
            raise ZeroHankelMinor(k + 1)
        if k == 0:
            gammas.append(sigma[1] / sigma[0])
        else:
            gammas.append(sigma[k + 1] / sigma[k] - sigma_prev[k] / sigma_prev[k - 1])
            betas.append(sigma[k] / sigma_prev[k - 1])
        # next row: sigma_{k+1, l} = sigma_{k, l+1} - gamma_k sigma_{k, l} - beta_k sigma_{k-1, l}
        nxt = []
        for l in range(k + 1, len(sigma) - 1):
            v = sigma[l + 1] - gammas[k] * sigma[l]
            if k > 0:
                v -= betas[k - 1] * sigma_prev[l]
            nxt.append(v)
        # pad alignment: store with index offset k+1
        sigma_prev = sigma
        sigma = [Fraction(0)] * (k + 1) + nxt
        k += 1
        if len(nxt) < 2:
            break
    return JFrac(tuple(gammas), tuple(betas))


def jfrac_to_series(jf: JFrac, n_terms: int, a0=1) -> TruncSeries:
    """Taylor expansion of the finite J-fraction with leading numerator a0."""
    h_list = [Poly.const(0), Poly.const(1)]
    k_list = [Poly.const(1), Poly.of([1, -jf.gammas[0]]) if jf.gammas else Poly.const(1)]
    for j in range(1, len(jf.gammas)):
        b = Poly.of([0, 0, -jf.betas[j - 1]])
        d = Poly.of([1, -jf.gammas[j]])
        h_list.append(d * h_list[-1] + b * h_list[-2])
        k_list.append(d * k_list[-1] + b * k_list[-2])
    from .exact import rational_series

    return rational_series(h_list[-1], k_list[-1], n_terms).scale(Fraction(a0))


# ---------------------------------------------------------------------------
# Growth bounds
# ---------------------------------------------------------------------------


def truncated_cf_bound(alphas, n: int, precision=Fraction(1, 10**6)) -> float:
    """mu_n: growth rate of the depth-n truncated continued fraction =
    reciprocal of the smallest positive root of its denominator polynomial."""
    den = _sfrac_convergent_denominator(alphas, n)
    iso = smallest_positive_root(den, precision)
    if iso is None:
        return 0.0
    lo, hi = iso
    mid = (lo + hi) / 2
    return float(1 / mid) if mid != 0 else float("inf")


def growth_bounds(seq: MomentSeq, precision=Fraction(1, 10**6)) -> BoundsReport:
    """The three coefficient-based lower bounds on the growth constant:
    term ratios, truncated-continued-fraction growth rates mu_n, and the
    interleaved-tail bounds (sqrt(alpha_n) + sqrt(alpha_{n-1}))^2.

    The tail bounds assume the odd- and even-indexed alpha subsequences are
    nondecreasing (flagged in ``assumptions``; empirical for the main use)."""
    sf = extract_sfrac(seq)
    al = sf.alphas
    if any(a < 0 for a in al):
        raise NegativeAlpha("negative continued-fraction coefficient: "
                            "the prefix is not Stieltjes-consistent")
    ratio = max(float(seq.terms[i] / seq.terms[i - 1]) for i in range(1, len(seq.terms)))
    mus = []
    for n in range(1, len(al)):
        mus.append(truncated_cf_bound(al, n, precision))
    tails = []
    for n in range(1, len(al)):
        tails.append((sqrt(float(al[n])) + sqrt(float(al[n - 1]))) ** 2)
    return BoundsReport(
        ratio_bound=ratio,
        truncated_cf_bounds=tuple(mus),
        monotone_tail_bounds=tuple(tails),
        assumptions={
            "monotone_tail_bounds": "assumes interleaved alpha subsequences are nondecreasing",
            "sfrac_depth": len(al),
            "halted_at": sf.halted_at,
        },
    )


def alpha_scaling_data(cf: SFrac) -> list[tuple]:
    """Plot-ready rows (n, n^(-2/3), alpha_n, parity) for extrapolating the
    alpha trend."""
    rows = []
    for n, a in enumerate(cf.alphas):
        if n == 0:
            continue
        rows.append((n, n ** (-2.0 / 3.0), float(a), "odd" if n % 2 else "even"))
    return rows

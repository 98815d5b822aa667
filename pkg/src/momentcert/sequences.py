"""Sequence generation, ingestion and transforms.

Families covered: the classical moment sequences (Catalan, Motzkin,
Fibonacci, factorial), counts of permutations avoiding an increasing
pattern of any length (via the exact Bessel-type Toeplitz determinant),
Av(1342) from its algebraic generating function, the 13 quarter-plane walk
models from their closed-form generating functions, a brute-force
pattern-avoidance oracle, the sequence-transform table, and an OEIS b-file
reader.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Poly, TruncSeries, rational_series, series_pow_rational

try:  # compiled kernel, with pure-Python fallback
    from . import _patterns as _kernel
except ImportError:  # pragma: no cover - exercised only without the extension
    from . import _patterns_py as _kernel

KERNEL_NAME = _kernel.KERNEL_NAME


class MalformedLine(ValueError):
    def __init__(self, line_no: int, text: str):
        self.line_no = line_no
        super().__init__(f"malformed b-file line {line_no}: {text!r}")


class NonContiguousIndices(ValueError):
    pass


class HalfPowerResidue(ArithmeticError):
    """Internal consistency failure: the Toeplitz determinant kept a
    half-integer power of the variable."""


@dataclass(frozen=True)
class MomentSeq:
    """A named exact sequence (the universal input of the toolkit)."""

    name: str
    terms: tuple  # Fractions (typically integers)
    source: str = "Generated"  # Generated | Ingested | BruteForce
    meta: dict = field(default_factory=dict, compare=False)

    @staticmethod
    def of(name: str, terms: Iterable, source: str = "Generated", meta: dict | None = None) -> "MomentSeq":
        ts = tuple(Fraction(t) for t in terms)
        if not ts:
            raise ValueError("a sequence needs at least its 0-th term")
        return MomentSeq(name, ts, source, meta or {})

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Fraction:
        return self.terms[n]

    def prefix(self, n: int) -> "MomentSeq":
        return MomentSeq(self.name, self.terms[:n], self.source, self.meta)

    def as_ints(self) -> list[int]:
        return [int(t) for t in self.terms]


@dataclass(frozen=True)
class Pattern:
    """A classical permutation pattern (one-line notation, values 1..m).

    The brute-force oracle accepts patterns of length <= 4, except that
    increasing patterns 12...m are allowed at any length.
    """

    values: tuple

    @staticmethod
    def of(vals: Iterable[int] | int | str) -> "Pattern":
        if isinstance(vals, int):
            vals = [int(ch) for ch in str(vals)]
        elif isinstance(vals, str):
            vals = [int(ch) for ch in vals]
        v = tuple(int(x) for x in vals)
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"not a permutation of 1..{len(v)}: {v}")
        return Pattern(v)

    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))


# ---------------------------------------------------------------------------
# Increasing-pattern counts by the exact Toeplitz determinant
# ---------------------------------------------------------------------------


def _bessel_like_t_series(j: int, t_order: int) -> TruncSeries:
    """sum_m t^(2m+j) / (m! (m+j)!) as a series in t = sqrt(x); the
    half-integer powers of x become odd powers of t."""
    from math import factorial

    cs = [Fraction(0)] * t_order
    m = 0
    while 2 * m + j < t_order:
        cs[2 * m + j] = Fraction(1, factorial(m) * factorial(m + j))
        m += 1
    return TruncSeries.make(0, cs, t_order)


@lru_cache(maxsize=None)
def lis_bounded_counts(k: int, n_terms: int) -> tuple:
    """Number of permutations of {1..n} whose longest increasing subsequence
    has length <= k, for n = 0..n_terms-1 (equivalently the avoiders of the
    increasing pattern of length k+1).  Exact, via the k x k Toeplitz
    determinant of Bessel-type series in sqrt(x)."""
    from math import factorial

    if k < 1:
        raise ValueError("k >= 1 required")
    t_order = 2 * n_terms + k * k + 1
    entries = {}
    for d in range(k):
        entries[d] = _bessel_like_t_series(d, t_order)

    # Toeplitz determinant [I_{i-j}] by Laplace expansion over column subsets
    memo: dict[tuple[int, ...], TruncSeries] = {}

    def minor(r: int, cols: tuple[int, ...]) -> TruncSeries:
        if r == k:
            return TruncSeries.one(t_order)
        if cols in memo:
            return memo[cols]
        acc = TruncSeries.zero(t_order)
        for pos, c in enumerate(cols):
            e = entries[abs(r - c)]
            term = (e * minor(r + 1, cols[:pos] + cols[pos + 1:])).truncate(t_order)
            acc = acc + (term if pos % 2 == 0 else term.scale(-1))
        memo[cols] = acc
        return acc

    det = minor(0, tuple(range(k)))
    # half powers of x are odd powers of t and must cancel in the determinant
    for i, c in enumerate(det.coeffs):
        if (det.low + i) % 2 == 1 and c != 0:
            raise HalfPowerResidue(f"odd t-power {det.low + i} survives")
    out = []
    for n in range(n_terms):
        out.append(det[2 * n] * factorial(n) ** 2)
    return tuple(out)


def toeplitz_borel_transform(k: int, n_terms: int) -> TruncSeries:
    """The x-series whose n-th coefficient is (LIS<=k count at n) / n!^2."""
    from math import factorial

    counts = lis_bounded_counts(k, n_terms)
    return TruncSeries.make(0, [c / factorial(n) ** 2 for n, c in enumerate(counts)], n_terms)


# ---------------------------------------------------------------------------
# Walk-model generating functions (closed algebraic forms)
# ---------------------------------------------------------------------------

# (a, b, c, radicand poly) encode F(z) = (a z - 1 + sqrt(radicand)) / (b z (1 - c z));
# "inv_quartic" marks the one quartic-root model.
_WALK_SQRT_OVER_Z = {
    1: (2, 2, 2, [1, 0, -4]),
    2: (3, 2, 3, [1, -2, -3]),
    3: (5, 4, 5, [1, -2, -15]),
    4: (4, 4, 4, [1, 0, -16]),
    5: (2, 2, 3, [1, 0, -8]),
    6: (4, 4, 3, [1, 0, -8]),
    7: (2, 2, 4, [1, 0, -12]),
    8: (3, 2, 4, [1, -2, -7]),
    9: (5, 4, 4, [1, -2, -7]),
    10: (3, 2, 5, [1, -2, -11]),
}
_WALK_SQRT_OVER_Z2 = {
    11: (1, 2, [1, -2, -3]),   # F = (1 - z - sqrt(...)) / (2 z^2)
    12: (2, 8, [1, -4, -12]),  # F = (1 - 2z - sqrt(...)) / (8 z^2)
}


def walk_model_series(model: int, n_terms: int) -> TruncSeries:
    """Exact series of the closed-form generating function of one of the 13
    quarter-plane walk models."""
    order = n_terms
    if model in _WALK_SQRT_OVER_Z:
        a, b, c, rad = _WALK_SQRT_OVER_Z[model]
        root = series_pow_rational(TruncSeries.from_poly(Poly.of(rad), order + 2), Fraction(1, 2))
        num = root + TruncSeries.from_poly(Poly.of([-1, a]), order + 2)
        num = num.shift(-1)  # divide by z (constant term cancels)
        if num[-1] != 0:
            raise ArithmeticError("walk numerator not divisible by z")
        den = TruncSeries.from_poly(Poly.of([b]) * Poly.of([1, -c]), order + 1)
        return (num * den.inverse()).truncate(order)
    if model in _WALK_SQRT_OVER_Z2:
        a, b, rad = _WALK_SQRT_OVER_Z2[model]
        root = series_pow_rational(TruncSeries.from_poly(Poly.of(rad), order + 3), Fraction(1, 2))
        num = TruncSeries.from_poly(Poly.of([1, -a]), order + 3) - root
        num = num.shift(-2).scale(Fraction(1, b))
        if num[-1] != 0 or num[-2] != 0:
            raise ArithmeticError("walk numerator not divisible by z^2")
        return num.truncate(order)
    if model == 13:
        # ( ((1+2z)/(1-6z))^{1/4} - 1 ) / (2z)
        ratio = TruncSeries.from_poly(Poly.of([1, 2]), order + 2) * \
            TruncSeries.from_poly(Poly.of([1, -6]), order + 2).inverse()
        root = series_pow_rational(ratio, Fraction(1, 4))
        num = (root - TruncSeries.one(order + 2)).shift(-1).scale(Fraction(1, 2))
        return num.truncate(order)
    raise ValueError(f"unknown walk model {model}")


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def generate(family: str, n_terms: int) -> MomentSeq:
    """Generate the first n_terms exact terms of a named family.

    Families: catalan, motzkin, fibonacci, factorial, av1342,
    av_increasing(k) with k >= 2 (written ``av123``, ``av1234``, ... or
    ``lis<k-1>``), walk1..walk13.
    """
    if n_terms < 1:
        raise ValueError("n_terms >= 1")
    fam = family.lower().strip()
    if fam == "catalan":
        ts = [Fraction(1)]
        for n in range(n_terms - 1):
            ts.append(ts[-1] * 2 * (2 * n + 1) / (n + 2))
        return MomentSeq.of("catalan", ts)
    if fam == "motzkin":
        ts = [Fraction(1), Fraction(1)]
        for n in range(1, n_terms):
            ts.append(((2 * n + 3) * ts[-1] + 3 * n * ts[-2]) / (n + 3))
        return MomentSeq.of("motzkin", ts[:n_terms])
    if fam in ("fibonacci", "fib"):
        ts = [1, 1]
        while len(ts) < n_terms:
            ts.append(ts[-1] + ts[-2])
        return MomentSeq.of("fibonacci", ts[:n_terms])
    if fam == "factorial":
        ts = [Fraction(1)]
        for n in range(1, n_terms):
            ts.append(ts[-1] * n)
        return MomentSeq.of("factorial", ts)
    if fam == "av1342":
        # algebraic closed form ((1-8x)^{3/2} + 1 + 20x - 8x^2) / (2 (1+x)^3)
        half = series_pow_rational(TruncSeries.from_poly(Poly.of([1, -8]), n_terms), Fraction(3, 2))
        num = half + TruncSeries.from_poly(Poly.of([1, 20, -8]), n_terms)
        den = TruncSeries.from_poly(Poly.of([2]) * Poly.of([1, 1]) * Poly.of([1, 1]) * Poly.of([1, 1]), n_terms)
        s = num * den.inverse()
        return MomentSeq.of("av1342", s.coeff_list(0, n_terms))
    if fam.startswith("walk"):
        model = int(fam[4:])
        s = walk_model_series(model, n_terms)
        return MomentSeq.of(fam, s.coeff_list(0, n_terms))
    k = _parse_increasing_family(fam)
    if k is not None:
        return MomentSeq.of(fam, lis_bounded_counts(k - 1, n_terms))
    raise ValueError(f"unknown family {family!r}")


def _parse_increasing_family(fam: str) -> int | None:
    """Return the pattern length k for names like av1234 / av_increasing(4) /
    lis3, or None."""
    if fam.startswith("av_increasing(") and fam.endswith(")"):
        return int(fam[len("av_increasing("):-1])
    if fam.startswith("lis"):
        return int(fam[3:]) + 1
    if fam.startswith("av") and fam[2:].isdigit():
        digits = [int(ch) for ch in fam[2:]]
        if digits == list(range(1, len(digits) + 1)):
            return len(digits)
    return None


def av_increasing(k: int, n_terms: int) -> MomentSeq:
    """Counts of permutations avoiding the increasing pattern 12...k."""
    if k < 2:
        raise ValueError("k >= 2")
    return MomentSeq.of(f"av_increasing({k})", lis_bounded_counts(k - 1, n_terms))


def brute_force_av(pattern: Pattern | Iterable[int] | int, n_max: int) -> MomentSeq:
    """Count pattern-avoiding permutations of each length 0..n_max by
    exhaustive enumeration (factorial cost; n_max <= 9)."""
    if not isinstance(pattern, Pattern):
        pattern = Pattern.of(pattern)
    if n_max > 9:
        raise ValueError("brute force limited to n_max <= 9")
    if len(pattern.values) > 4 and not pattern.is_increasing():
        raise ValueError("general patterns limited to length 4")
    counts = _kernel.count_avoiders([pattern.values], n_max)
    name = "av" + "".join(str(v) for v in pattern.values)
    return MomentSeq.of(name, counts, source="BruteForce")


def brute_force_av_class(patterns: Sequence, n_max: int) -> MomentSeq:
    """Counts of permutations avoiding every pattern in a finite set."""
    pats = [Pattern.of(p) if not isinstance(p, Pattern) else p for p in patterns]
    for p in pats:
        if len(p.values) > 4 and not p.is_increasing():
            raise ValueError("general patterns limited to length 4")
    counts = _kernel.count_avoiders([p.values for p in pats], n_max)
    name = "av(" + ",".join("".join(str(v) for v in p.values) for p in pats) + ")"
    return MomentSeq.of(name, counts, source="BruteForce")


# ---------------------------------------------------------------------------
# Transform table
# ---------------------------------------------------------------------------


def transform(seq: MomentSeq, kind: str, *, r: int | None = None, other: MomentSeq | None = None) -> MomentSeq:
    """Apply one row of the sequence-transform table.

    kinds: shift_forward (b_n = a_{n+1}), shift_backward (b_n = a_{n-1},
    drops the final window term), differences (b_n = sum C(r,j)(-1)^j a_{n+j}),
    derivative (b_n = n a_{n-1}), primitive (b_n = a_{n+1}/(n+1)),
    sum / termwise_product (binary), dilation (b_n = a_{rn}, r >= 2).
    """
    a = seq.terms
    k = kind.lower()
    if k == "shift_forward":
        if len(a) < 2:
            raise ValueError("need at least two terms")
        return MomentSeq.of(f"shift+({seq.name})", a[1:], seq.source)
    if k == "shift_backward":
        # b_0 has no source term and is dropped to 0; the window length is kept
        return MomentSeq.of(f"shift-({seq.name})", (Fraction(0),) + a[:-1], seq.source)
    if k == "differences":
        if r is None or r < 0:
            raise ValueError("differences needs r >= 0")
        from math import comb

        n_out = len(a) - r
        if n_out < 1:
            raise ValueError("insufficient terms for differences of order r")
        out = [sum(comb(r, j) * (-1) ** j * a[n + j] for j in range(r + 1)) for n in range(n_out)]
        return MomentSeq.of(f"diff{r}({seq.name})", out, seq.source)
    if k == "derivative":
        out = [Fraction(0)] + [n * a[n - 1] for n in range(1, len(a))]
        return MomentSeq.of(f"ddx({seq.name})", out, seq.source)
    if k == "primitive":
        out = [a[n + 1] / (n + 1) for n in range(len(a) - 1)]
        return MomentSeq.of(f"prim({seq.name})", out, seq.source)
    if k in ("sum", "termwise_product"):
        if other is None:
            raise ValueError(f"{kind} needs a second sequence")
        n = min(len(a), len(other.terms))
        if len(a) != len(other.terms):
            raise ValueError("length mismatch for binary transform")
        op = (lambda x, y: x + y) if k == "sum" else (lambda x, y: x * y)
        return MomentSeq.of(f"{k}({seq.name},{other.name})", [op(a[i], other.terms[i]) for i in range(n)], seq.source)
    if k == "dilation":
        if r is None or r < 2:
            raise ValueError("dilation needs r >= 2")
        return MomentSeq.of(f"dil{r}({seq.name})", [a[r * n] for n in range((len(a) - 1) // r + 1)], seq.source)
    raise ValueError(f"unknown transform {kind!r}")


# ---------------------------------------------------------------------------
# OEIS b-file ingestion
# ---------------------------------------------------------------------------


def ingest_bfile(data: bytes | str, name: str = "bfile") -> MomentSeq:
    """Parse an OEIS b-file: optional '#' comment lines, then "index value"
    pairs; indices must be contiguous.  Terms are returned in index order
    starting from the smallest index."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(line_no, raw)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MalformedLine(line_no, raw) from exc
        pairs.append((idx, val))
    if not pairs:
        raise ValueError("empty b-file")
    pairs.sort()
    lo = pairs[0][0]
    for pos, (idx, _) in enumerate(pairs):
        if idx != lo + pos:
            raise NonContiguousIndices(f"expected index {lo + pos}, got {idx}")
    return MomentSeq.of(name, [v for _, v in pairs], source="Ingested", meta={"first_index": lo})


def load_fixture(name: str) -> MomentSeq:
    """Load one of the bundled b-file fixtures (e.g. 'av1324')."""
    ref = importlib.resources.files("momentcert").joinpath(f"data/{name}.bfile")
    return ingest_bfile(ref.read_bytes(), name=name)

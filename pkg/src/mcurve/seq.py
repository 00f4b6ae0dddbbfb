"""Input sequences and their derived integer profiles.

A projective monomial curve is specified by a strictly increasing tuple of
positive integers m_1 < ... < m_n.  Everything downstream (Groebner bases,
regularity, Hilbert data) is parameterized by a handful of integers derived
here: (q, r, alpha, k, c, tau) for arithmetic sequences and
(p, s, delta, beta_j, sigma_j, lambda_j) for generalized arithmetic ones.

All values are exact integers; operations are pure and all types immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BoundExceeded,
    GcdViolation,
    HNotDividingD,
    NonIncreasing,
    NonPositive,
    NotArithmetic,
    NotGeneralizedArithmetic,
    Overflow,
    TooShort,
)

# Entries are mathematically unbounded, but absurd magnitudes only ever come
# from malformed input; reject them before they reach the DP / Buchberger caps.
ENTRY_LIMIT = 10**9


@dataclass(frozen=True)
class CurveSequence:
    """Strictly increasing tuple m_1 < ... < m_n of positive integers, n >= 2."""

    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.m) < 2:
            raise TooShort(f"need at least 2 terms, got {len(self.m)}")
        for v in self.m:
            if not isinstance(v, int):
                raise NonPositive(f"entries must be integers, got {v!r}")
            if v < 1:
                raise NonPositive(f"entries must be >= 1, got {v}")
            if v > ENTRY_LIMIT:
                raise Overflow(f"entry {v} exceeds limit {ENTRY_LIMIT}")
        for a, b in zip(self.m, self.m[1:]):
            if a >= b:
                raise NonIncreasing(f"entries must strictly increase: {a} >= {b}")

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def m1(self) -> int:
        return self.m[0]

    @property
    def mn(self) -> int:
        return self.m[-1]

    def scaled_down(self, g: int) -> "CurveSequence":
        """Divide every entry by a common factor g (same curve)."""
        assert all(v % g == 0 for v in self.m)
        return CurveSequence(tuple(v // g for v in self.m))

    def with_gcd_one(self) -> "CurveSequence":
        """Divide by the gcd of all entries (defines the same curve)."""
        g = math.gcd(*self.m)
        return self if g == 1 else self.scaled_down(g)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.m)


def parse_sequence(text: str) -> CurveSequence:
    """Parse a comma-separated list of integers; reject unsorted input."""
    if not text.strip():
        raise TooShort("empty input")
    parts = [p.strip() for p in text.split(",")]
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise NonPositive(f"not an integer list: {text!r}") from exc
    return CurveSequence(values)


@dataclass(frozen=True)
class SequenceClass:
    """Classification of a sequence: arithmetic / generalized arithmetic / general.

    kind == "arithmetic"  means m_i = m_1 + (i-1) d          (h = 1),
    kind == "generalized" means m_i = h m_1 + (i-1) d, i >= 2 (h >= 2),
    kind == "general"     means no exact (h, d) fit exists.
    """

    kind: str
    h: int | None
    d: int | None
    gcd_all: int
    gcd_m1_d: int | None

    @property
    def is_arithmetic(self) -> bool:
        return self.kind == "arithmetic"

    @property
    def is_generalized_arithmetic(self) -> bool:
        return self.kind in ("arithmetic", "generalized")


def classify(seq: CurveSequence) -> SequenceClass:
    """Detect the unique exact (h, d) fit, falling back to "general".

    For n >= 3 the fit is forced: d is the common gap of m_2, ..., m_n and
    h = (m_2 - d) / m_1; both must be positive integers.  For n = 2 every
    pair is arithmetic with d = m_2 - m_1.
    """
    m = seq.m
    gcd_all = math.gcd(*m)
    if seq.n == 2:
        d = m[1] - m[0]
        return SequenceClass("arithmetic", 1, d, gcd_all, math.gcd(m[0], d))
    d = m[2] - m[1]
    if any(m[i + 1] - m[i] != d for i in range(1, seq.n - 1)):
        return SequenceClass("general", None, None, gcd_all, None)
    rem = m[1] - d
    if rem <= 0 or rem % m[0] != 0:
        return SequenceClass("general", None, None, gcd_all, None)
    h = rem // m[0]
    kind = "arithmetic" if h == 1 else "generalized"
    if kind == "arithmetic" and m[1] - m[0] != d:
        # h == 1 forces m_2 = m_1 + d already; kept as a guard
        return SequenceClass("general", None, None, gcd_all, None)
    return SequenceClass(kind, h, d, gcd_all, math.gcd(m[0], d))


@dataclass(frozen=True)
class ArithmeticProfile:
    """Derived data of an arithmetic sequence with gcd(m_1, d) = 1.

    m_1 = q (n-1) + r with 1 <= r <= n-1, alpha = q + d, k = n - r, and
    m_1 - 1 = c (n-1) + tau with 1 <= tau <= n-1 (c = -1 when m_1 = 1).
    """

    d: int
    q: int
    r: int
    alpha: int
    k: int
    c: int
    tau: int


def arithmetic_profile(seq: CurveSequence) -> ArithmeticProfile:
    cls = classify(seq)
    if not cls.is_arithmetic:
        raise NotArithmetic(f"({seq}) is not an arithmetic sequence")
    d = cls.d
    assert d is not None
    if math.gcd(seq.m1, d) != 1:
        raise GcdViolation(f"gcd(m_1, d) = {math.gcd(seq.m1, d)} != 1 for ({seq})")
    n, m1 = seq.n, seq.m1
    r = (m1 - 1) % (n - 1) + 1
    q = (m1 - r) // (n - 1)
    alpha = q + d
    k = n - r
    tau = (m1 - 2) % (n - 1) + 1
    c = (m1 - 1 - tau) // (n - 1)
    prof = ArithmeticProfile(d=d, q=q, r=r, alpha=alpha, k=k, c=c, tau=tau)
    # alpha*m_1 + m_i = m_{n-k+i} + q*m_n for all i in 1..k
    for i in range(1, k + 1):
        assert alpha * m1 + seq.m[i - 1] == seq.m[n - k + i - 1] + q * seq.mn
    return prof


@dataclass(frozen=True)
class GeneralizedProfile:
    """Derived data of a generalized arithmetic sequence, h >= 2, h | d.

    m_1 = p (n-1) + s with 1 <= s <= n-1 and delta = p h + d + h.  The arrays
    beta, sigma, lam are indexed j = 0 .. delta' (delta' = delta / h) and
    satisfy j h m_1 + beta_j m_2 = m_{sigma_j} + lam_j m_n.
    """

    h: int
    d: int
    p: int
    s: int
    delta: int
    delta_prime: int
    beta: tuple[int, ...]
    sigma: tuple[int, ...]
    lam: tuple[int, ...]


def generalized_profile(seq: CurveSequence) -> GeneralizedProfile:
    cls = classify(seq)
    if cls.kind != "generalized":
        raise NotGeneralizedArithmetic(f"({seq}) has no fit with h >= 2")
    h, d = cls.h, cls.d
    assert h is not None and d is not None
    if math.gcd(seq.m1, d) != 1:
        raise GcdViolation(f"gcd(m_1, d) = {math.gcd(seq.m1, d)} != 1 for ({seq})")
    if d % h != 0:
        raise HNotDividingD(f"h = {h} does not divide d = {d} for ({seq})")
    n, m1, mn = seq.n, seq.m1, seq.mn
    s = (m1 - 1) % (n - 1) + 1
    p = (m1 - s) // (n - 1)
    delta = p * h + d + h
    dp = delta // h

    # recursion, seeded at j = delta'
    beta = [0] * (dp + 1)
    sigma = [0] * (dp + 1)
    lam = [0] * (dp + 1)
    sigma[dp], lam[dp], beta[dp] = s + 1, p, 0
    for j in range(dp, 0, -1):
        if sigma[j] != n:
            sigma[j - 1], lam[j - 1], beta[j - 1] = sigma[j] + 1, lam[j], beta[j] + 1
        else:
            sigma[j - 1], lam[j - 1], beta[j - 1] = 3, lam[j] + 1, beta[j] + 2

    # closed form must reproduce the recursion
    for j in range(1, dp + 1):
        bump = (j + s - 2) // (n - 2) if n > 2 else 0
        assert beta[dp - j] == j + bump, (seq, j)
        assert lam[dp - j] == p + bump, (seq, j)
        assert sigma[dp - j] == (s + 1 + j - 3) % (n - 2) + 3, (seq, j)

    # defining identity at every index, and the membership form of beta_0
    for j in range(dp + 1):
        assert j * h * m1 + beta[j] * seq.m[1] == seq.m[sigma[j] - 1] + lam[j] * mn, (seq, j)
    assert beta[0] == (mn - h) // (n * h - 2 * h) + 1, seq

    return GeneralizedProfile(
        h=h, d=d, p=p, s=s, delta=delta, delta_prime=dp,
        beta=tuple(beta), sigma=tuple(sigma), lam=tuple(lam),
    )


def min_multiple(seq: CurveSequence, cap: int | None = None) -> int:
    """Smallest b >= 1 with b*m_1 in the additive span N m_2 + ... + N m_n.

    Computed by a subset-sum style DP over reachable values, independent of
    the alpha / delta closed forms (which predict alpha+1 resp. delta).
    """
    m = seq.m
    if cap is None:
        cls = classify(seq)
        if cls.is_generalized_arithmetic:
            h, d = cls.h, cls.d
            est = (seq.m1 - 1) // (seq.n - 1) * h + d + h
        else:
            est = seq.m1 + seq.mn
        cap = 10 * (seq.mn + est)
    limit = cap * m[0]
    reach = bytearray(limit + 1)
    reach[0] = 1
    for v in m[1:]:
        for x in range(v, limit + 1):
            if reach[x - v]:
                reach[x] = 1
    for b in range(1, cap + 1):
        if reach[b * m[0]]:
            return b
    raise BoundExceeded(f"no multiple of m_1 found up to cap {cap} for ({seq})")

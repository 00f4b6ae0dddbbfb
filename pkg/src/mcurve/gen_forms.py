"""Closed forms for generalized arithmetic sequences m_i = h m_1 + (i-1)d.

The non-Cohen-Macaulay witness search works on arbitrary sequences; the rest
assumes h >= 2, h | d, gcd(m_1, d) = 1 and n >= 3.  The curve C' of the tail
(m_2, ..., m_n) equals the curve of the rescaled arithmetic sequence
(m_2/h, ..., m_n/h), which supplies its Groebner basis, decomposition and
Hilbert data through the arithmetic closed forms.

Hilbert data of the quotient: HF(s) = sum_{i<h} HF_{C'}(s-i) + Delta_{s+1}
with Delta_s the staircase count below the beta profile, and the Hilbert
polynomial is m_n s - m_n (h-1)/2 + h gamma + h sum_{i=1}^{delta/h-1} beta_i.
Both are pinned against standard-monomial counting across the test sweeps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .arith_forms import ArithHilbert, gb_arithmetic, hilbert_arithmetic, irred_dec_arithmetic
from .errors import CaseNotApplicable, GcdViolation, NotGeneralizedArithmetic
from .monideal import IrreducibleComponent, IrreducibleDecomposition
from .poly import Binomial, DegRevLex, is_member_binomial, make_binomial, shift_binomial
from .seq import (
    CurveSequence,
    arithmetic_profile,
    classify,
    generalized_profile,
)


@dataclass(frozen=True)
class NotCmWitness:
    """Subsequence m_{i_1} < ... < m_{i_l} = m_n with m_{i_j} = h m_{i_1} + (j-1)d,
    h > 1 and h m_{i_1} outside the sequence: forces a generator of the initial
    ideal involving x_n, hence a non-Cohen-Macaulay coordinate ring."""

    indices: tuple[int, ...]  # 1-based, last one is n
    h: int
    d: int
    missing: int  # h * m_{i_1}


def not_cm_witness(seq: CurveSequence) -> NotCmWitness | None:
    """First witness by increasing subsequence length, then lexicographic start."""
    m = seq.m
    n = seq.n
    values = set(m)
    for l in range(3, n + 1):
        for head in itertools.combinations(range(n - 1), l - 1):
            idx = head + (n - 1,)
            sub = [m[i] for i in idx]
            d = sub[2] - sub[1]
            if d < 1:
                continue
            rem = sub[1] - d
            if rem <= 0 or rem % sub[0] != 0:
                continue
            h = rem // sub[0]
            if h <= 1:
                continue
            if any(sub[t] != h * sub[0] + t * d for t in range(1, l)):
                continue
            if h * sub[0] in values:
                continue
            return NotCmWitness(tuple(i + 1 for i in idx), h, d, h * sub[0])
    return None


def _require_generalized(seq: CurveSequence) -> tuple[int, int]:
    cls = classify(seq)
    if not cls.is_generalized_arithmetic:
        raise NotGeneralizedArithmetic(f"({seq}) is not generalized arithmetic")
    assert cls.h is not None and cls.d is not None
    return cls.h, cls.d


def is_cm_generalized(seq: CurveSequence) -> bool:
    """Cohen-Macaulay iff the sequence is arithmetic (h = 1); needs n >= 3."""
    h, d = _require_generalized(seq)
    if seq.n < 3:
        raise NotGeneralizedArithmetic("criterion needs n >= 3 (n = 2 is always arithmetic)")
    if math.gcd(seq.m1, d) != 1:
        raise GcdViolation(f"gcd(m_1, d) != 1 for ({seq})")
    return h == 1


def is_complete_intersection(seq: CurveSequence) -> bool:
    """I(C) is a complete intersection iff n = 2, or n = 3 with h = 1 and m_1 even."""
    h, d = _require_generalized(seq)
    if math.gcd(seq.m1, d) != 1:
        raise GcdViolation(f"gcd(m_1, d) != 1 for ({seq})")
    if seq.n == 2:
        return True
    return seq.n == 3 and h == 1 and seq.m1 % 2 == 0


def _tail_curve(seq: CurveSequence, h: int) -> CurveSequence:
    """The rescaled tail (m_2/h, ..., m_n/h): same curve as (m_2, ..., m_n)."""
    return CurveSequence(tuple(v // h for v in seq.m[1:]))


def gb_generalized(seq: CurveSequence) -> list[Binomial]:
    """Minimal degrevlex Groebner basis of I(C) for h >= 2, h | d.

    Union of: the arithmetic basis of the tail curve shifted into the
    variables x_2..x_{n+1}; the h-family x_1^h x_i - x_2 x_{i-1} x_{n+1}^{h-1}
    for 3 <= i <= n; and x_1^{jh} x_2^{beta_j} - x_{sigma_j} x_n^{lambda_j}
    x_{n+1}^{j(h-1) + d/h} for 1 <= j <= delta/h.
    """
    prof = generalized_profile(seq)
    n, h = seq.n, prof.h
    nv = n + 1
    order = DegRevLex(nv)

    def mono(*pairs: tuple[int, int]) -> tuple[int, ...]:
        out = [0] * nv
        for idx, power in pairs:
            out[idx] += power
        return tuple(out)

    basis = [shift_binomial(b, 1, nv) for b in gb_arithmetic(_tail_curve(seq, h))]
    for i in range(3, n + 1):
        basis.append(Binomial(
            mono((0, h), (i - 1, 1)),
            mono((1, 1), (i - 2, 1), (n, h - 1)),
        ))
    for j in range(1, prof.delta_prime + 1):
        basis.append(Binomial(
            mono((0, j * h), (1, prof.beta[j])),
            mono((prof.sigma[j] - 1, 1), (n - 1, prof.lam[j]), (n, j * (h - 1) + prof.d // h)),
        ))

    for b in basis:
        oriented = make_binomial(b.lead, b.trail, order)
        assert oriented is not None and oriented.lead == b.lead, f"misoriented {b}"
        assert is_member_binomial(seq, b), f"non-member {b} for ({seq})"
    return basis


def irred_dec_generalized(seq: CurveSequence) -> IrreducibleDecomposition:
    """Irredundant irreducible decomposition of in(I(C)) for h >= 2, h | d:
    <x_1^h> + (components of in(I(C'))) together with
    <x_1^{jh}, x_2^{beta_{j-1}}, x_3, ..., x_n> for j = 2..delta/h."""
    prof = generalized_profile(seq)
    n, h = seq.n, prof.h
    tail = _tail_curve(seq, h)
    tail_dec = irred_dec_arithmetic(arithmetic_profile(tail), tail.n)
    comps = []
    for c in tail_dec.components:
        powers = {0: h}
        for i, e in c.powers:
            powers[i + 1] = e
        comps.append(IrreducibleComponent.from_map(powers))
    for j in range(2, prof.delta_prime + 1):
        powers = {0: j * h, 1: prof.beta[j - 1]}
        for i in range(2, n):
            powers[i] = 1
        comps.append(IrreducibleComponent.from_map(powers))
    return IrreducibleDecomposition.from_components(comps)


def reg_generalized(seq: CurveSequence) -> int:
    """Regularity: delta - 1 when n-1 does not divide m_1, else delta."""
    prof = generalized_profile(seq)
    return prof.delta if seq.m1 % (seq.n - 1) == 0 else prof.delta - 1


def _polyadd(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class GenHilbert:
    """Hilbert data for the generalized case (h >= 2, h | d).

    hs_numerator is over (1-t)^2; gamma is the Hilbert-polynomial constant of
    the tail curve C'; delta_at counts the staircase lattice points
    {(a, b) : a + b < s, b < beta_{floor(a/h)}, floor(a/h) >= 1}.
    """

    hs_numerator: tuple[int, ...]
    hp_slope: int
    hp_constant: int
    gamma: int
    h: int
    delta: int
    beta: tuple[int, ...]
    tail: ArithHilbert

    def delta_at(self, s: int) -> int:
        h = self.h
        total = 0
        for j in range(1, self.delta // h):
            for a in range(j * h, j * h + h):
                total += max(0, min(self.beta[j], s - a))
        return total

    def hf_at(self, s: int) -> int:
        head = sum(self.tail.hf_at(s - i) for i in range(self.h))
        return head + self.delta_at(s + 1)


def hilbert_generalized(seq: CurveSequence) -> GenHilbert:
    prof = generalized_profile(seq)
    h, delta, dp = prof.h, prof.delta, prof.delta_prime
    tail = hilbert_arithmetic(_tail_curve(seq, h))

    num = _polymul([1] * h, list(tail.hs_numerator))
    num = _polyadd(num, [0] * h + [1] * (delta - h))
    corr = [0] * (delta + h)
    for i in range(1, dp):
        corr[i * h + prof.beta[i]] += 1
    corr = _polymul([1] * h, corr)
    num = _polyadd(num, [-c for c in corr])

    gamma = tail.hp_constant
    assert seq.mn * (h - 1) % 2 == 0
    constant = (-seq.mn * (h - 1) // 2 + h * gamma
                + h * sum(prof.beta[1:dp]))
    return GenHilbert(
        hs_numerator=_trim(num),
        hp_slope=seq.mn,
        hp_constant=constant,
        gamma=gamma,
        h=h,
        delta=delta,
        beta=prof.beta,
        tail=tail,
    )


def hs_n3(seq: CurveSequence) -> tuple[int, ...]:
    """Hilbert-series numerator for n = 3, by the five-case closed form.

    Selection: delta = 2h splits on the parity of m_1; otherwise h = 2 is its
    own case (3 t^j plateau through j = delta - 2) and h >= 3 splits on
    parity again.  Verification path only; hilbert_generalized is the
    production route and the two must agree.
    """
    if seq.n != 3:
        raise CaseNotApplicable(f"n = {seq.n}, need n = 3")
    try:
        prof = generalized_profile(seq)
    except NotGeneralizedArithmetic as exc:
        raise CaseNotApplicable(str(exc)) from exc
    h, delta, beta = prof.h, prof.delta, prof.beta
    m3 = seq.mn
    out = [0] * (delta + 2)

    if delta == 2 * h:
        if seq.m1 % 2 == 1:
            out[0] += 1
            out[1] += 2
            for j in range(2, h + 1):
                out[j] += 3
            out[h + 1] += 1
            out[2 * h] -= 1
        else:
            out[0] += 1
            out[1] += 2
            out[2] += 3
            for j in range(3, h + 1):
                out[j] += 4
            out[h + 1] += 3
            out[h + 2] += 1
            out[2 * h] -= 1
            out[2 * h + 1] -= 1
    elif h == 2:
        out[0] += 1
        out[1] += 2
        for j in range(2, delta - 1):
            out[j] += 3
        out[delta - 1] -= (delta - 6) // 2
        out[delta] -= (delta - 2) // 2
    else:
        for j in range(h):
            out[j] += j + 1
        for j in range(h, m3 // h):
            out[j] += h + 1
        for j in range(h - 2):
            out[m3 // h + j] += h - j
        out[m3 // h + h - 2] += 1
        top = delta // h - 1 if seq.m1 % 2 == 1 else delta // h
        for j in range(2, top + 1):
            out[j * h + beta[j]] -= 1
            out[j * h + beta[j] + 1] -= 1
        if seq.m1 % 2 == 1:
            out[delta] -= 1
    return _trim(out)

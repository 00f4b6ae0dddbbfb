"""Closed forms for arithmetic sequences m_i = m_1 + (i-1)d, gcd(m_1, d) = 1.

Covers the minimal Groebner basis, the irreducible decomposition of the
initial ideal, regularity, Hilbert series / function / polynomial, the
Cohen-Macaulay type, Gorensteinness, and the first Betti number.  Every
constructed binomial is membership-asserted against the bidegree kernel test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .monideal import IrreducibleComponent, IrreducibleDecomposition
from .poly import Binomial, DegRevLex, is_member_binomial, make_binomial
from .seq import ArithmeticProfile, CurveSequence, arithmetic_profile


def gb_arithmetic(seq: CurveSequence) -> list[Binomial]:
    """Minimal degrevlex Groebner basis of I(C).

    Two families: the staircase quadrics x_i x_j - x_{i-1} x_{j+1} for
    2 <= i <= j <= n-1, and x_1^alpha x_i - x_{n-k+i} x_n^q x_{n+1}^d for
    1 <= i <= k, whose trail index realizes the defining identity
    alpha m_1 + m_i = m_{n-k+i} + q m_n.
    """
    prof = arithmetic_profile(seq)
    n = seq.n
    nv = n + 1
    order = DegRevLex(nv)

    def e(idx: int, power: int = 1) -> tuple[int, ...]:
        return tuple(power if t == idx else 0 for t in range(nv))

    def mono(*pairs: tuple[int, int]) -> tuple[int, ...]:
        out = [0] * nv
        for idx, power in pairs:
            out[idx] += power
        return tuple(out)

    basis: list[Binomial] = []
    for i in range(2, n):
        for j in range(i, n):
            lead = mono((i - 1, 1), (j - 1, 1))
            trail = mono((i - 2, 1), (j, 1))
            basis.append(Binomial(lead, trail))
    for i in range(1, prof.k + 1):
        lead = mono((0, prof.alpha), (i - 1, 1))
        trail = mono((n - prof.k + i - 1, 1), (n - 1, prof.q), (n, prof.d))
        basis.append(Binomial(lead, trail))

    for b in basis:
        oriented = make_binomial(b.lead, b.trail, order)
        assert oriented is not None and oriented.lead == b.lead, f"misoriented {b}"
        assert is_member_binomial(seq, b), f"non-member {b} for ({seq})"
    return basis


def betti1_arithmetic(profile: ArithmeticProfile, n: int) -> int:
    """First Betti number: C(n-1, 2) + k (the basis is a minimal generating set)."""
    return math.comb(n - 1, 2) + profile.k


def irred_dec_arithmetic(profile: ArithmeticProfile, n: int) -> IrreducibleDecomposition:
    """Irredundant irreducible decomposition of in(I(C)) in n+1 variables.

    Components <x_1^{alpha + delta_i}, x_2, ..., x_{i-1}, x_i^2, x_{i+1},
    ..., x_{n-1}> for i = 2..n-1 with delta_i = 0 for i <= k and 1 beyond;
    when k = n-1 all delta_i vanish and <x_1^{alpha+1}, x_2, ..., x_{n-1}>
    is appended.
    """
    alpha, k = profile.alpha, profile.k
    comps = []
    for i in range(2, n):
        bump = 0 if (k == n - 1 or i <= k) else 1
        powers = {0: alpha + bump}
        for j in range(2, n):
            powers[j - 1] = 2 if j == i else 1
        comps.append(IrreducibleComponent.from_map(powers))
    if k == n - 1:
        powers = {0: alpha + 1}
        for j in range(2, n):
            powers[j - 1] = 1
        comps.append(IrreducibleComponent.from_map(powers))
    return IrreducibleDecomposition.from_components(comps)


def reg_arithmetic(seq: CurveSequence) -> int:
    """Castelnuovo-Mumford regularity: ceil((m_n - 1)/(n - 1))."""
    prof = arithmetic_profile(seq)
    reg = -((1 - seq.mn) // (seq.n - 1))
    assert reg == (prof.alpha if prof.k == seq.n - 1 else prof.alpha + 1)
    return reg


@dataclass(frozen=True)
class ArithHilbert:
    """Hilbert data of the coordinate ring of an arithmetic-sequence curve.

    hs_numerator is the numerator over (1-t)^2; the Hilbert polynomial is
    hp_slope * s + hp_constant, valid for s >= alpha; hf_reg is the
    regularity of the Hilbert function.
    """

    n: int
    alpha: int
    k: int
    hs_numerator: tuple[int, ...]
    hp_slope: int
    hp_constant: int
    hf_reg: int

    def hf_at(self, s: int) -> int:
        if s < 0:
            return 0
        if s < self.alpha:
            return math.comb(s + 2, 2) + (self.n - 2) * math.comb(s + 1, 2)
        return self.hp_slope * s + self.hp_constant


def hilbert_arithmetic(seq: CurveSequence) -> ArithHilbert:
    prof = arithmetic_profile(seq)
    n, alpha, k = seq.n, prof.alpha, prof.k
    numerator = [1] + [n - 1] * alpha + [n - 1 - k]
    while numerator and numerator[-1] == 0:
        numerator.pop()
    constant = (alpha * (2 - n + k) - math.comb(alpha + 1, 2)
                - (n - 2) * math.comb(alpha, 2) + 1)
    hf_reg = alpha if k < n - 1 else alpha - 1
    return ArithHilbert(
        n=n, alpha=alpha, k=k,
        hs_numerator=tuple(numerator),
        hp_slope=seq.mn, hp_constant=constant, hf_reg=hf_reg,
    )


def cm_type_arithmetic(seq: CurveSequence) -> int:
    """Cohen-Macaulay type: tau with m_1 - 1 = c(n-1) + tau, 1 <= tau <= n-1."""
    prof = arithmetic_profile(seq)
    n = seq.n
    assert prof.tau == (n - 1 if prof.k == n - 1 else n - 1 - prof.k)
    return prof.tau


def is_gorenstein(seq: CurveSequence) -> bool:
    """Gorenstein iff m_1 = 2 (mod n-1), i.e. the type is 1."""
    arithmetic_profile(seq)  # enforce preconditions
    return seq.m1 % (seq.n - 1) == 2 % (seq.n - 1)

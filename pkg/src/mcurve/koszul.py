"""Koszul classification.

Sufficient witnesses: the generalized-arithmetic characterization
(consecutive integers with n > m_1), the explicit n = 3 and n = 4 lists, the
geometric family m_i = 2^{i-1} d, and a quadratic Groebner basis under
degrevlex or a y-dominant order.  Necessary failures: the degree-2 relation
conditions 2 m_i = m_j + mu m_l, or I(C) not being generated by quadrics.
Outside all of these the honest verdict is "unknown".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GcdViolation, NotGeneralizedArithmetic, WrongN
from .grobner import has_quadratic_gb, is_generated_by_quadrics
from .poly import DegRevLex, YWeighted
from .seq import CurveSequence, classify

N3_KOSZUL = frozenset({(1, 2, 3), (1, 2, 4), (2, 3, 4)})

N4_KOSZUL = frozenset({
    (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6), (1, 2, 4, 6), (1, 2, 4, 8),
    (2, 3, 4, 5), (2, 3, 4, 6), (2, 3, 4, 8), (2, 4, 5, 6), (2, 4, 5, 8),
    (3, 4, 5, 6), (3, 4, 6, 8), (4, 5, 6, 8), (4, 6, 7, 8),
})


@dataclass(frozen=True)
class KoszulStatus:
    verdict: str  # "koszul" | "not_koszul" | "unknown"
    reason: str

    SUFFICIENT = ("classified_generalized", "listed_n3", "listed_n4",
                  "geometric", "quadratic_gb")
    NECESSARY = ("classified_generalized", "listed_n3", "listed_n4",
                 "fails_necessary_quadric", "fails_quadric_generation")


def koszul_generalized(seq: CurveSequence) -> bool:
    """Generalized arithmetic with gcd(m_1, d) = 1: Koszul iff the terms are
    consecutive integers (h = d = 1) and n > m_1."""
    cls = classify(seq)
    if not cls.is_generalized_arithmetic:
        raise NotGeneralizedArithmetic(f"({seq}) is not generalized arithmetic")
    assert cls.h is not None and cls.d is not None
    if math.gcd(seq.m1, cls.d) != 1:
        raise GcdViolation(f"gcd(m_1, d) != 1 for ({seq})")
    return cls.h == 1 and cls.d == 1 and seq.n > seq.m1


def koszul_n3(seq: CurveSequence) -> bool:
    if seq.n != 3:
        raise WrongN(f"need n = 3, got {seq.n}")
    if seq.with_gcd_one() != seq:
        raise GcdViolation(f"gcd of ({seq}) is not 1")
    return seq.m in N3_KOSZUL


def koszul_n4(seq: CurveSequence) -> bool:
    if seq.n != 4:
        raise WrongN(f"need n = 4, got {seq.n}")
    if seq.with_gcd_one() != seq:
        raise GcdViolation(f"gcd of ({seq}) is not 1")
    return seq.m in N4_KOSZUL


def necessary_quadric_conditions(seq: CurveSequence) -> bool:
    """Quadric generation forces, for every i < n, a relation
    2 m_i = m_j + mu m_l with j, l != i and mu in {0, 1}."""
    m = seq.m
    n = seq.n
    for i in range(n - 1):
        target = 2 * m[i]
        others = [m[j] for j in range(n) if j != i]
        if target in others:
            continue
        if any(a + b == target for a in others for b in others):
            continue
        return False
    return True


def is_geometric(seq: CurveSequence) -> bool:
    """m_i = 2^{i-1} d for all i (with d = m_1)."""
    d = seq.m1
    return all(v == (1 << i) * d for i, v in enumerate(seq.m))


def koszul_status(seq: CurveSequence, cap: int | None = None) -> KoszulStatus:
    """Decision cascade: classified families first, then necessary-condition
    failures, then quadratic-Groebner-basis witnesses, else unknown.

    The input is first divided by the gcd of its terms (same curve), which
    also makes gcd(m_1, d) = 1 whenever a (h, d) fit exists.
    """
    base = seq.with_gcd_one()
    cls = classify(base)

    if cls.is_generalized_arithmetic:
        ok = koszul_generalized(base)
        return KoszulStatus("koszul" if ok else "not_koszul", "classified_generalized")
    if base.n == 3:
        return KoszulStatus("koszul" if koszul_n3(base) else "not_koszul", "listed_n3")
    if base.n == 4:
        return KoszulStatus("koszul" if koszul_n4(base) else "not_koszul", "listed_n4")
    if is_geometric(base):
        return KoszulStatus("koszul", "geometric")

    if not necessary_quadric_conditions(base):
        return KoszulStatus("not_koszul", "fails_necessary_quadric")
    if not is_generated_by_quadrics(base, cap):
        return KoszulStatus("not_koszul", "fails_quadric_generation")
    witness = quadratic_gb_witness(base, cap)
    if witness is not None:
        return KoszulStatus("koszul", f"quadratic_gb:{witness}")
    return KoszulStatus("unknown", "inconclusive")


def quadratic_gb_witness(seq: CurveSequence, cap: int | None = None) -> str | None:
    """Name of an order under which I(C) has a quadratic reduced basis:
    degrevlex first, then each y-dominant order on a sequence variable."""
    nv = seq.n + 1
    if has_quadratic_gb(seq, DegRevLex(nv), cap):
        return "degrevlex"
    for idx in range(seq.n - 1):
        order = YWeighted(nv, idx)
        if has_quadratic_gb(seq, order, cap):
            return order.name
    return None

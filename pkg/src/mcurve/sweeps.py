"""Family sweeps: per-instance verification of every closed form against the
Buchberger oracle.

Each checker returns a dict of named boolean results (one per verified
claim); an instance passes when all are true.  The same checkers back the
acceptance suite and the ``mcurve sweep`` command.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

from .arith_forms import (
    betti1_arithmetic,
    cm_type_arithmetic,
    gb_arithmetic,
    hilbert_arithmetic,
    irred_dec_arithmetic,
    is_gorenstein,
    reg_arithmetic,
)
from .gen_forms import (
    gb_generalized,
    hilbert_generalized,
    hs_n3,
    irred_dec_generalized,
    is_cm_generalized,
    not_cm_witness,
    reg_generalized,
)
from .grobner import (
    buchberger,
    initial_ideal,
    reduce_basis,
    toric_ideal,
)
from .koszul import N3_KOSZUL, N4_KOSZUL, quadratic_gb_witness
from .monideal import (
    cm_type_oracle,
    cm_via_initial,
    hf_quotient,
    hs_general_split,
    hs_numerator,
    irreducible_decomposition,
    is_nested_type,
    last_step_check,
    reg_nested_type,
)
from .poly import DegRevLex
from .seq import CurveSequence, arithmetic_profile, generalized_profile, min_multiple


@dataclass(frozen=True)
class ArithmeticSweep:
    n_values: tuple[int, ...] = (2, 3, 4, 5, 6)
    d_values: tuple[int, ...] = (1, 2, 3, 4, 5)
    max_mn: int = 30


@dataclass(frozen=True)
class GeneralizedSweep:
    h_values: tuple[int, ...] = (2, 3)
    e_values: tuple[int, ...] = (1, 2, 3)  # d = h * e
    n_values: tuple[int, ...] = (3, 4, 5, 6)
    max_mn: int = 60


@dataclass(frozen=True)
class KoszulN3Sweep:
    max_m3: int = 12


@dataclass(frozen=True)
class KoszulN4Sweep:
    max_m4: int = 10


@dataclass(frozen=True)
class RandomSweep:
    count: int = 50
    max_n: int = 5
    max_mn: int = 25
    seed: int = 0


def arithmetic_instances(cfg: ArithmeticSweep) -> Iterator[CurveSequence]:
    for n in cfg.n_values:
        for d in cfg.d_values:
            m1 = 1
            while m1 + (n - 1) * d <= cfg.max_mn:
                if math.gcd(m1, d) == 1:
                    yield CurveSequence(tuple(m1 + i * d for i in range(n)))
                m1 += 1


def generalized_instances(cfg: GeneralizedSweep) -> Iterator[CurveSequence]:
    for n in cfg.n_values:
        for h in cfg.h_values:
            for e in cfg.e_values:
                d = h * e
                m1 = 1
                while h * m1 + (n - 1) * d <= cfg.max_mn:
                    if math.gcd(m1, d) == 1 and h * m1 + d > m1:
                        yield CurveSequence(
                            (m1,) + tuple(h * m1 + i * d for i in range(1, n)))
                    m1 += 1


def random_instances(cfg: RandomSweep) -> Iterator[CurveSequence]:
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        n = rng.randint(2, cfg.max_n)
        values = rng.sample(range(1, cfg.max_mn + 1), n)
        yield CurveSequence(tuple(sorted(values)))


def check_arithmetic_instance(seq: CurveSequence, cap: int | None = None) -> dict[str, bool]:
    """Every closed form of the arithmetic family against the oracle."""
    prof = arithmetic_profile(seq)
    n = seq.n
    gb = toric_ideal(seq, cap)
    ini = initial_ideal(gb)
    closed = reduce_basis(gb_arithmetic(seq), DegRevLex(n + 1))
    hil = hilbert_arithmetic(seq)
    reg = reg_arithmetic(seq)

    checks = {
        "gb_equals_oracle": set(closed) == gb.element_set(),
        "cm_via_initial": cm_via_initial(ini, n),
        "nested_type": is_nested_type(ini),
        "reg_formula": reg == reg_nested_type(ini),
        "reg_h_degree": reg == len(hil.hs_numerator) - 1,
        "hf_counts": all(hil.hf_at(s) == hf_quotient(ini, s) for s in range(reg + 4)),
        "hs_numerator": hil.hs_numerator == hs_numerator(ini),
        "cm_type": cm_type_arithmetic(seq) == cm_type_oracle(seq, ini),
        "gorenstein": is_gorenstein(seq) == (cm_type_arithmetic(seq) == 1),
        "betti1": betti1_arithmetic(prof, n) == len(gb),
        "decomposition": irred_dec_arithmetic(prof, n) == irreducible_decomposition(ini),
        "min_multiple": min_multiple(seq) == prof.alpha + 1,
        "split_correction_zero": hs_general_split(ini, seq)[1] == (),
    }
    return checks


def check_generalized_instance(seq: CurveSequence, cap: int | None = None) -> dict[str, bool]:
    """Every closed form of the h >= 2, h | d family against the oracle."""
    prof = generalized_profile(seq)
    n = seq.n
    gb = toric_ideal(seq, cap)
    ini = initial_ideal(gb)
    closed = reduce_basis(gb_generalized(seq), DegRevLex(n + 1))
    hil = hilbert_generalized(seq)
    reg = reg_generalized(seq)

    tail = CurveSequence(seq.m[1:])
    tail_gb = toric_ideal(tail, cap)
    tail_ini = initial_ideal(tail_gb)

    hf = [hf_quotient(ini, s) for s in range(reg + 4)]
    slope = hf[reg + 3] - hf[reg + 2]
    constant = hf[reg + 3] - slope * (reg + 3)

    checks = {
        "gb_equals_oracle": set(closed) == gb.element_set(),
        "not_cm": not cm_via_initial(ini, n),
        "not_cm_matches_criterion": is_cm_generalized(seq) == cm_via_initial(ini, n),
        "not_cm_witness_found": not_cm_witness(seq) is not None,
        "elimination_equality": ini.restrict(1) == tail_ini,
        "nested_type": is_nested_type(ini),
        "reg_formula": reg == reg_nested_type(ini),
        "reg_last_component": reg == prof.delta + prof.beta[prof.delta_prime - 1] - 2,
        "last_step": last_step_check(seq, ini, reg),
        "hf_counts": all(hil.hf_at(s) == hf[s] for s in range(reg + 4)),
        "hs_numerator": hil.hs_numerator == hs_numerator(ini),
        "hp_fitted": (slope, constant) == (hil.hp_slope, hil.hp_constant),
        "decomposition": irred_dec_generalized(seq) == irreducible_decomposition(ini),
        "min_multiple": min_multiple(seq) == prof.delta,
    }
    if n == 3:
        checks["hs_n3_cross"] = hs_n3(seq) == hil.hs_numerator
    return checks


def check_koszul_n3_instance(seq: CurveSequence, cap: int | None = None) -> dict[str, bool]:
    from .grobner import is_generated_by_quadrics
    listed = seq.m in N3_KOSZUL
    checks = {"quadric_iff_listed": is_generated_by_quadrics(seq, cap) == listed}
    if listed:
        checks["quadratic_gb_witness"] = quadratic_gb_witness(seq, cap) is not None
    return checks


def check_koszul_n4_instance(seq: CurveSequence, cap: int | None = None) -> dict[str, bool]:
    from .grobner import is_generated_by_quadrics
    listed = seq.m in N4_KOSZUL
    checks = {"quadric_iff_listed": is_generated_by_quadrics(seq, cap) == listed}
    if listed:
        checks["quadratic_gb_witness"] = quadratic_gb_witness(seq, cap) is not None
    return checks


def check_random_instance(seq: CurveSequence, cap: int | None = None) -> dict[str, bool]:
    """Structural invariants that hold for arbitrary sequences."""
    from .poly import is_member_binomial

    gb = toric_ideal(seq, cap)
    ini = initial_ideal(gb)
    rng = random.Random(hash(seq.m) & 0xFFFF)
    dec = irreducible_decomposition(ini) if not ini.is_zero else None
    reg = reg_nested_type(ini)
    num = hs_numerator(ini)
    main, corr = hs_general_split(ini, seq)

    def convolved(s: int) -> int:
        return sum(c * (s - j + 1) for j, c in enumerate(num) if j <= s)

    member_ok = all(is_member_binomial(seq, g) for g in gb.elements)
    no_monomial = all(g.trail is not None and g.lead != g.trail for g in gb.elements)
    perm = list(gb.elements)
    rng.shuffle(perm)
    deterministic = buchberger(perm, DegRevLex(seq.n + 1), cap).elements == gb.elements

    dec_ok = True
    if dec is not None:
        for _ in range(50):
            m = tuple(rng.randrange(0, reg + 3) for _ in range(seq.n + 1))
            dec_ok &= ini.contains(m) == dec.contains(m)

    witness = not_cm_witness(seq)
    cm = cm_via_initial(ini, seq.n)

    split_num = list(main) + [0] * (len(corr) + 2)
    for j, c in enumerate(corr):
        split_num[j + 1] -= c
    while split_num and split_num[-1] == 0:
        split_num.pop()

    return {
        "members": member_ok,
        "no_monomial": no_monomial,
        "deterministic": deterministic,
        "nested_type": is_nested_type(ini),
        "decomposition_membership": dec_ok,
        "hf_convolution": all(hf_quotient(ini, s) == convolved(s) for s in range(reg + 4)),
        "split_combination": tuple(split_num) == num,
        "witness_implies_not_cm": (witness is None) or (not cm),
        "cm_implies_zero_correction": (not cm) or corr == (),
    }

"""Monomial-ideal combinatorics.

Irreducible decomposition by recursive generator splitting, nested-type
regularity, standard-monomial counting (Hilbert functions / series of the
quotient), Cohen-Macaulay detection on initial ideals, the bidegree-based
Cohen-Macaulay type oracle, and the last-step F-set regularity check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import NonTerminating, NotCohenMacaulay, NotNestedType
from .poly import Monomial, bidegree, mono_divides
from .seq import CurveSequence

_GRID_CAP = 5_000_000  # hard cap on enumerated standard-monomial grids
_BFS_CAP = 1_000_000


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Inclusion-minimal subset generating the same ideal."""
    out: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its inclusion-minimal generators."""

    nvars: int
    gens: tuple[Monomial, ...]

    @staticmethod
    def from_gens(nvars: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = tuple(gens)
        assert all(len(g) == nvars for g in gens)
        return MonomialIdeal(nvars, _minimalize(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def plus(self, extra: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal.from_gens(self.nvars, self.gens + tuple(extra))

    def restrict(self, start: int) -> "MonomialIdeal":
        """Intersection with the subring on variables x_{start+1}, ..."""
        kept = [g[start:] for g in self.gens if all(e == 0 for e in g[:start])]
        return MonomialIdeal.from_gens(self.nvars - start, kept)

    def __str__(self) -> str:
        from .poly import format_monomial
        return "<" + ", ".join(format_monomial(g) for g in self.gens) + ">"


# -- irreducible decomposition -------------------------------------------------

@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure variable powers <x_i^{e_i} : i in support>."""

    powers: tuple[tuple[int, int], ...]  # sorted (var index, exponent), exponent >= 1

    @staticmethod
    def from_map(powers: dict[int, int]) -> "IrreducibleComponent":
        assert powers and all(e >= 1 for e in powers.values())
        return IrreducibleComponent(tuple(sorted(powers.items())))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.powers)

    def contains(self, m: Monomial) -> bool:
        return any(m[i] >= e for i, e in self.powers)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """self >= other as ideals: every pure-power generator of other must
        lie in self, i.e. self has a smaller-or-equal power of that variable."""
        mine = dict(self.powers)
        return all(j in mine and mine[j] <= f for j, f in other.powers)

    def regularity(self) -> int:
        """reg of R modulo the component: sum of generator degrees minus count."""
        return sum(e for _, e in self.powers) - len(self.powers)

    def as_ideal(self, nvars: int) -> MonomialIdeal:
        gens = []
        for i, e in self.powers:
            g = [0] * nvars
            g[i] = e
            gens.append(tuple(g))
        return MonomialIdeal.from_gens(nvars, gens)

    def __str__(self) -> str:
        parts = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in self.powers]
        return "[" + ", ".join(parts) + "]"


@dataclass(frozen=True)
class IrreducibleDecomposition:
    components: tuple[IrreducibleComponent, ...]

    @staticmethod
    def from_components(comps: Iterable[IrreducibleComponent]) -> "IrreducibleDecomposition":
        return IrreducibleDecomposition(tuple(sorted(set(comps), key=lambda c: c.powers)))

    def contains(self, m: Monomial) -> bool:
        return all(c.contains(m) for c in self.components)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.components)


def reg_irreducible(c: IrreducibleComponent) -> int:
    return c.regularity()


def _split_candidate(gens: tuple[Monomial, ...]) -> Monomial | None:
    """Generator with the most mixed support, or None if all are pure powers."""
    best = None
    best_size = 1
    for g in gens:
        size = sum(1 for e in g if e > 0)
        if size > best_size:
            best, best_size = g, size
    return best


def irreducible_decomposition(ideal: MonomialIdeal) -> IrreducibleDecomposition:
    """Irredundant irreducible decomposition by recursive generator splitting.

    A mixed generator m = x_i^{e} * v (v coprime to x_i) splits the ideal as
    (I + <x_i^e>) /\\ (I + <v>); pure-power leaves are the components, pruned
    by pairwise containment.
    """
    assert not ideal.is_zero, "decomposition of the zero ideal is undefined"
    comps: set[IrreducibleComponent] = set()
    stack = [ideal.gens]
    while stack:
        gens = stack.pop()
        mixed = _split_candidate(gens)
        if mixed is None:
            powers: dict[int, int] = {}
            for g in gens:
                i = next(j for j, e in enumerate(g) if e > 0)
                powers[i] = min(powers.get(i, g[i]), g[i])
            comps.add(IrreducibleComponent.from_map(powers))
            continue
        i = next(j for j, e in enumerate(mixed) if e > 0)  # highest-priority variable
        u = tuple(mixed[j] if j == i else 0 for j in range(len(mixed)))
        v = tuple(0 if j == i else mixed[j] for j in range(len(mixed)))
        stack.append(_minimalize(gens + (u,)))
        stack.append(_minimalize(gens + (v,)))
    # prune components containing another one (hence the whole intersection)
    keep = [c for c in comps
            if not any(o != c and c.contains_component(o) for o in comps)]
    return IrreducibleDecomposition.from_components(keep)


def is_nested_type(ideal: MonomialIdeal) -> bool:
    """True iff every irreducible component is supported on a prefix x_1..x_i."""
    if ideal.is_zero:
        return True
    dec = irreducible_decomposition(ideal)
    return all(c.support == tuple(range(len(c.support))) for c in dec.components)


def reg_nested_type(ideal: MonomialIdeal) -> int:
    """Regularity of R/I for a nested-type monomial ideal: max over components."""
    if ideal.is_zero:
        return 0
    dec = irreducible_decomposition(ideal)
    if not all(c.support == tuple(range(len(c.support))) for c in dec.components):
        raise NotNestedType(f"{ideal} has a non-prefix associated prime")
    return max(c.regularity() for c in dec.components)


# -- standard-monomial counting -------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _count_standard(gens: tuple[Monomial, ...], nvars: int, s: int) -> int:
    """Number of degree-s monomials in nvars variables outside <gens>."""
    if s < 0:
        return 0
    if any(all(e == 0 for e in g) for g in gens):
        return 0  # unit ideal
    if nvars == 0:
        return 1 if s == 0 else 0
    if not gens:
        return math.comb(s + nvars - 1, nvars - 1)
    total = 0
    for e in range(s + 1):
        sub = _minimalize(g[:-1] for g in gens if g[-1] <= e)
        total += _count_standard(sub, nvars - 1, s - e)
    return total


def _count_standard_brute(gens: tuple[Monomial, ...], nvars: int, s: int) -> int:
    """Second-level oracle: direct enumeration of degree-s monomials."""
    def gen(prefix: list[int], left: int, pos: int) -> Iterator[Monomial]:
        if pos == nvars - 1:
            yield tuple(prefix + [left])
            return
        for e in range(left + 1):
            yield from gen(prefix + [e], left - e, pos + 1)

    if nvars == 0:
        return 1 if s == 0 else 0
    return sum(1 for m in gen([], s, 0)
               if not any(mono_divides(g, m) for g in gens))


def hf_quotient(ideal: MonomialIdeal, s: int, *, brute: bool = False) -> int:
    """Hilbert function of R/I at degree s (count of standard monomials)."""
    if brute:
        return _count_standard_brute(ideal.gens, ideal.nvars, s)
    return _count_standard(ideal.gens, ideal.nvars, s)


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def hs_numerator(ideal: MonomialIdeal, *, cap: int | None = None) -> tuple[int, ...]:
    """Numerator of the Hilbert series of R/I over (1-t)^2.

    Valid when the quotient has Krull dimension <= 2: the second difference
    of the Hilbert function vanishes beyond the regularity, which the Taylor
    resolution bounds by the degree of the lcm of the generators.  The
    trailing window beyond that bound must come out zero, else the dimension
    hypothesis fails and NonTerminating is raised.
    """
    lcm_deg = sum(max(g[i] for g in ideal.gens) for i in range(ideal.nvars)) if ideal.gens else 0
    window = max(ideal.nvars, 2) + 2
    bound = lcm_deg + window
    if cap is not None and bound > cap:
        raise NonTerminating(f"series bound {bound} exceeds cap {cap}")
    coeffs = [
        hf_quotient(ideal, s) - 2 * hf_quotient(ideal, s - 1) + hf_quotient(ideal, s - 2)
        for s in range(bound + 1)
    ]
    if any(c != 0 for c in coeffs[lcm_deg + 2:]):
        raise NonTerminating("second differences do not stabilize: quotient dimension > 2")
    return _trim(coeffs)


def _pure_power_bounds(gens: tuple[Monomial, ...], nvars: int) -> list[int] | None:
    """Per-variable pure-power exponents, or None if some variable has none
    (the quotient is then not artinian)."""
    bounds = [None] * nvars
    for g in gens:
        support = [i for i, e in enumerate(g) if e > 0]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    if any(b is None for b in bounds):
        return None
    return list(bounds)  # type: ignore[return-value]


def _standard_monomials(gens: tuple[Monomial, ...], nvars: int) -> list[Monomial]:
    """All standard monomials of an artinian monomial ideal."""
    bounds = _pure_power_bounds(gens, nvars)
    if bounds is None:
        raise NonTerminating("quotient is not artinian: some variable has no pure power")
    size = 1
    for b in bounds:
        size *= b
        if size > _GRID_CAP:
            raise NonTerminating(f"standard-monomial grid exceeds {_GRID_CAP}")
    out = []

    def walk(prefix: list[int], pos: int) -> None:
        if pos == nvars:
            m = tuple(prefix)
            if not any(mono_divides(g, m) for g in gens):
                out.append(m)
            return
        for e in range(bounds[pos]):
            walk(prefix + [e], pos + 1)

    walk([], 0)
    return out


def hs_general_split(ideal: MonomialIdeal, seq: CurveSequence) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two finite sums whose combination main(t) - t*corr(t) is the
    Hilbert-series numerator of R/in(I(C)) over (1-t)^2.

    main: degrees of standard monomials modulo in(I(C)) + <x_n, x_{n+1}>.
    corr: degrees of monomials x^g with g_{n+1} = 0, x^g outside in(I(C))
    but x_n * x^g inside it (the non-Cohen-Macaulay jump term).
    """
    n = seq.n
    assert ideal.nvars == n + 1
    assert all(g[n] == 0 for g in ideal.gens), "x_{n+1} in a minimal generator"

    first_gens = tuple(g[:n - 1] for g in ideal.gens
                       if all(e == 0 for e in g[n - 1:]))
    first_gens = _minimalize(first_gens)
    main: list[int] = []
    for m in _standard_monomials(first_gens, n - 1):
        d = sum(m)
        while len(main) <= d:
            main.append(0)
        main[d] += 1

    qualifying: set[Monomial] = set()
    seen: set[Monomial] = set()
    for g in ideal.gens:
        if g[n - 1] == 0:
            continue
        base = tuple(e - 1 if i == n - 1 else e for i, e in enumerate(g))
        stack = [base]
        while stack:
            m = stack.pop()
            if m in seen:
                continue
            seen.add(m)
            if len(seen) > _BFS_CAP:
                raise NonTerminating("jump-term enumeration exploded")
            if ideal.contains(m):
                continue
            qualifying.add(m)
            for i in range(n):  # never extend x_{n+1}
                stack.append(tuple(e + 1 if j == i else e for j, e in enumerate(m)))
    corr: list[int] = []
    for m in qualifying:
        d = sum(m)
        while len(corr) <= d:
            corr.append(0)
        corr[d] += 1
    return _trim(main), _trim(corr)


# -- Cohen-Macaulay detection and type ------------------------------------------

def cm_via_initial(ideal: MonomialIdeal, n: int) -> bool:
    """Cohen-Macaulay criterion on in(I(C)) under degrevlex: the last two
    variables appear in no minimal generator."""
    assert ideal.nvars == n + 1
    return all(g[n - 1] == 0 and g[n] == 0 for g in ideal.gens)


def cm_type_oracle(seq: CurveSequence, ideal: MonomialIdeal) -> int:
    """Cohen-Macaulay type as the count of maximal bidegrees.

    B is the set of bidegrees of standard monomials modulo
    in(I(C)) + <x_n, x_{n+1}>; the type is #{b in B : b + a_i not in B for
    all i <= n-1}, where a_i = (m_i, m_n - m_i).
    """
    n = seq.n
    if not cm_via_initial(ideal, n):
        raise NotCohenMacaulay(f"({seq}) initial ideal has a generator in x_n or x_{{n+1}}")
    restricted = _minimalize(g[:n - 1] for g in ideal.gens)
    bidegs = set()
    for m in _standard_monomials(restricted, n - 1):
        full = m + (0, 0)
        bidegs.add(tuple(bidegree(seq, full)))
    steps = [(seq.m[i], seq.mn - seq.m[i]) for i in range(n - 1)]
    count = 0
    for b in bidegs:
        if all((b[0] + a, b[1] + t) not in bidegs for a, t in steps):
            count += 1
    return count


# -- last-step regularity witness ------------------------------------------------

def last_step_check(seq: CurveSequence, ideal: MonomialIdeal, reg: int) -> bool:
    """Check that reg equals the maximal degree in the F-set

    F = {g on x_1..x_{n-1} : x^g in I|_{x_n=x_{n+1}=1} and
                             x^g not in I|_{x_n=x_{n+1}=0}},

    which certifies that the regularity is attained at the last step of the
    minimal graded free resolution.
    """
    n = seq.n
    assert ideal.nvars == n + 1
    ones = _minimalize(g[:n - 1] for g in ideal.gens)  # x_n = x_{n+1} = 1
    zeros = _minimalize(g[:n - 1] for g in ideal.gens
                        if g[n - 1] == 0 and g[n] == 0)  # x_n = x_{n+1} = 0
    best = -1
    for m in _standard_monomials(zeros, n - 1):
        if any(mono_divides(g, m) for g in ones):
            best = max(best, sum(m))
    return best == reg

"""The independent oracle: Buchberger's algorithm on pure-difference binomials.

The toric ideal of a curve is built from scratch: integer kernel of the 2 x
(n+1) bidegree matrix (unimodular column reduction, so the lattice is
saturated), a short LLL-reduced lattice basis, the lattice-basis binomial
ideal, and successive saturation with respect to every variable using
"cheapest variable" degrevlex orders.  Everything stays a pure difference
throughout; coefficients never leave {+1, -1}.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeCapExceeded, McurveError
from .monideal import MonomialIdeal
from .poly import (
    Binomial,
    BlockOrder,
    DegRevLex,
    Monomial,
    TermOrder,
    bidegree,
    degrevlex_cheapest,
    is_member_binomial,
    make_binomial,
    mono_divides,
)
from .seq import CurveSequence


@dataclass(frozen=True)
class GroebnerBasis:
    """Canonically sorted reduced Groebner basis of a binomial ideal."""

    order: TermOrder
    elements: tuple[Binomial, ...]
    reduced: bool = True

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leads(self) -> tuple[Monomial, ...]:
        return tuple(b.lead for b in self.elements)

    def element_set(self) -> frozenset[Binomial]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def default_degree_cap(seq: CurveSequence) -> int:
    return 4 * (seq.mn + seq.n)


def _normal_form(a: Monomial, b: Monomial, leads: list[Monomial],
                 trails: list[Monomial], key) -> tuple[Monomial, Monomial] | None:
    """Fully reduce the pure difference a - b; None when it reduces to zero."""
    nred = len(leads)
    while True:
        if a == b:
            return None
        if key(a) < key(b):
            a, b = b, a
        for i in range(nred):
            lt = leads[i]
            if mono_divides(lt, a):
                tt = trails[i]
                a = tuple(x - y + z for x, y, z in zip(a, lt, tt))
                break
        else:
            for i in range(nred):
                lt = leads[i]
                if mono_divides(lt, b):
                    tt = trails[i]
                    b = tuple(x - y + z for x, y, z in zip(b, lt, tt))
                    break
            else:
                return a, b


def buchberger(gens: Iterable[Binomial], order: TermOrder,
               cap: int | None = None, *, use_chain_criterion: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the binomial ideal generated by `gens`.

    Pair selection is the normal strategy (lowest lcm degree first, ties by
    the order on the lcm), which together with final inter-reduction makes
    the output independent of the generator ordering.
    """
    key = order.key
    leads: list[Monomial] = []
    trails: list[Monomial] = []

    seed: list[tuple[Monomial, Monomial]] = []
    seen: set[tuple[Monomial, Monomial]] = set()
    for g in gens:
        if g.trail is None:
            raise McurveError(f"bare monomial {g} fed to buchberger: saturation bug upstream")
        ori = make_binomial(g.lead, g.trail, order)
        if ori is None:
            continue
        pair = (ori.lead, ori.trail)
        if pair not in seen:
            seen.add(pair)
            seed.append(pair)

    pairs: list[tuple[int, tuple, int, int]] = []
    treated: set[tuple[int, int]] = set()  # popped, or skipped by a criterion

    def push_pairs(new_idx: int) -> None:
        la = leads[new_idx]
        for i in range(new_idx):
            lb = leads[i]
            lcm = tuple(max(x, y) for x, y in zip(la, lb))
            if all(l == x + y for l, x, y in zip(lcm, la, lb)):
                treated.add((i, new_idx))  # coprime leads: S-polynomial drops
                continue
            heapq.heappush(pairs, (sum(lcm), key(lcm), i, new_idx))

    def add_element(a: Monomial, b: Monomial) -> None:
        if cap is not None and sum(a) > cap:
            raise DegreeCapExceeded(
                f"basis element of degree {sum(a)} exceeds cap {cap}")
        leads.append(a)
        trails.append(b)
        push_pairs(len(leads) - 1)

    for a, b in seed:
        nf = _normal_form(a, b, leads, trails, key)
        if nf is not None:
            add_element(*nf)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        la, lb = leads[i], leads[j]
        lcm = tuple(max(x, y) for x, y in zip(la, lb))
        if use_chain_criterion:
            # sound only when both sub-pairs were themselves treated already
            def _done(a: int, b: int) -> bool:
                return (min(a, b), max(a, b)) in treated
            if any(k != i and k != j and mono_divides(leads[k], lcm)
                   and _done(i, k) and _done(j, k) for k in range(len(leads))):
                treated.add((i, j))
                continue
        treated.add((i, j))
        if cap is not None and sum(lcm) > cap:
            raise DegreeCapExceeded(f"S-pair degree {sum(lcm)} exceeds cap {cap}")
        a = tuple(l - x + t for l, x, t in zip(lcm, la, trails[i]))
        b = tuple(l - x + t for l, x, t in zip(lcm, lb, trails[j]))
        nf = _normal_form(a, b, leads, trails, key)
        if nf is not None:
            add_element(*nf)

    basis = [Binomial(a, b) for a, b in zip(leads, trails)]
    return GroebnerBasis(order, _interreduce(basis, order), reduced=True)


def _interreduce(basis: Sequence[Binomial], order: TermOrder) -> tuple[Binomial, ...]:
    """Minimalize lead terms and fully reduce trails; canonical sort."""
    key = order.key
    ordered = sorted(basis, key=lambda g: key(g.lead))
    kept: list[Binomial] = []
    for g in ordered:
        if not any(mono_divides(h.lead, g.lead) for h in kept):
            kept.append(g)
    leads = [g.lead for g in kept]
    out: list[Binomial] = []
    for g in kept:
        trail = g.trail
        assert trail is not None
        changed = True
        while changed:
            changed = False
            for i, lt in enumerate(leads):
                if mono_divides(lt, trail):
                    tt = kept[i].trail
                    assert tt is not None
                    trail = tuple(x - y + z for x, y, z in zip(trail, lt, tt))
                    changed = True
                    break
        assert trail != g.lead
        out.append(Binomial(g.lead, trail))
    out.sort(key=lambda g: (key(g.lead), key(g.trail)))
    return tuple(out)


def reduce_basis(gens: Iterable[Binomial], order: TermOrder) -> tuple[Binomial, ...]:
    """Self-reduce a basis that is already a Groebner basis (e.g. a closed
    form): minimal leads, reduced trails, canonical sort."""
    oriented = []
    for g in gens:
        assert g.trail is not None
        ori = make_binomial(g.lead, g.trail, order)
        if ori is not None:
            oriented.append(ori)
    return _interreduce(oriented, order)


# -- integer kernel of the bidegree matrix ---------------------------------------

def _integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the saturated kernel {v : rows . v = 0} via unimodular column ops."""
    ncols = len(rows[0])
    A = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for r in A:
            r[dst] -= q * r[src]
        for r in U:
            r[dst] -= q * r[src]

    def col_swap(i: int, j: int) -> None:
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    rank = 0
    for row in range(len(A)):
        # euclidean elimination across columns rank..ncols-1 on this row
        while True:
            nz = [j for j in range(rank, ncols) if A[row][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(A[row][j]))
            col_swap(rank, piv)
            done = True
            for j in range(rank + 1, ncols):
                if A[row][j] != 0:
                    q = A[row][j] // A[row][rank]
                    col_addmul(j, rank, q)
                    if A[row][j] != 0:
                        done = False
            if done:
                rank += 1
                break
    kernel = [[U[i][j] for i in range(ncols)] for j in range(rank, ncols)]
    for v in kernel:
        assert all(sum(r[i] * v[i] for i in range(ncols)) == 0 for r in rows)
    return kernel


def _lll(basis: list[list[int]]) -> list[list[int]]:
    """Textbook LLL (delta = 0.99) with exact Fraction arithmetic; the
    dimensions here are tiny, so clarity beats speed."""
    delta = Fraction(99, 100)
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gso():
        star: list[list[Fraction]] = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                denom = dot(star[j], star[j])
                mu[i][j] = Fraction(dot([Fraction(x) for x in b[i]], star[j]), 1) / denom
                v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
            star.append(v)
        return star, mu

    star, mu = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = int(q + Fraction(1, 2)) if q >= 0 else -int(-q + Fraction(1, 2))
            if r != 0:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                star, mu = gso()
        if dot(star[k], star[k]) >= (delta - mu[k][k - 1] ** 2) * dot(star[k - 1], star[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            star, mu = gso()
            k = max(k - 1, 1)
    return b


def lattice_basis(seq: CurveSequence) -> list[tuple[int, ...]]:
    """Short basis of ker{v in Z^{n+1} : sum v_i a_i = (0, 0)} for the
    bidegree columns a_i; rank is n - 1 and the lattice is saturated."""
    n = seq.n
    rows = [
        [seq.m[i] for i in range(n)] + [0],
        [seq.mn - seq.m[i] for i in range(n)] + [seq.mn],
    ]
    kernel = _integer_kernel(rows)
    assert len(kernel) == n - 1, f"kernel rank {len(kernel)} != n-1 for ({seq})"
    return [tuple(v) for v in _lll(kernel)]


def _binomial_from_vector(v: Sequence[int], order: TermOrder) -> Binomial | None:
    plus = tuple(max(x, 0) for x in v)
    minus = tuple(max(-x, 0) for x in v)
    return make_binomial(plus, minus, order)


def toric_ideal(seq: CurveSequence, cap: int | None = None) -> GroebnerBasis:
    """Reduced degrevlex Groebner basis of the vanishing ideal I(C).

    Saturation: for every variable in turn, compute a Groebner basis in a
    degrevlex order making that variable cheapest and divide each element by
    the largest power of the variable dividing it; iterate to a fixed point.
    """
    n = seq.n
    nv = n + 1
    if cap is None:
        cap = default_degree_cap(seq)
    plain = DegRevLex(nv)
    current: list[Binomial] = []
    for v in lattice_basis(seq):
        b = _binomial_from_vector(v, plain)
        if b is not None:
            current.append(b)

    for _ in range(4):
        changed = False
        for i in range(nv):
            gb = buchberger(current, degrevlex_cheapest(nv, i), cap)
            nxt: list[Binomial] = []
            for g in gb.elements:
                assert g.trail is not None
                k = min(g.lead[i], g.trail[i])
                if k:
                    changed = True
                    lead = tuple(e - k if j == i else e for j, e in enumerate(g.lead))
                    trail = tuple(e - k if j == i else e for j, e in enumerate(g.trail))
                    nxt.append(Binomial(lead, trail))
                else:
                    nxt.append(g)
            current = nxt
        if not changed:
            break
    else:
        raise McurveError(f"saturation did not stabilize for ({seq})")

    final = buchberger(current, plain, cap)
    for g in final.elements:
        if g.trail is None or g.lead == g.trail:
            raise McurveError(f"monomial {g} in toric basis for ({seq}): saturation bug")
        assert is_member_binomial(seq, g), f"non-member {g} in toric basis for ({seq})"
    return final


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Monomial ideal of lead terms (minimal generators for a reduced basis)."""
    return MonomialIdeal.from_gens(gb.nvars, gb.leads())


def eliminate(seq: CurveSequence, keep_from: int, cap: int | None = None) -> GroebnerBasis:
    """Reduced degrevlex basis of I(C) /\\ K[x_{keep_from+1}, ..., x_{n+1}],
    computed with a block order eliminating the leading variables.  The
    result lives in the smaller ring (n + 1 - keep_from variables)."""
    nv = seq.n + 1
    assert 0 <= keep_from < nv
    if cap is None:
        cap = default_degree_cap(seq)
    full = toric_ideal(seq, cap)
    if keep_from == 0:
        return full
    block = buchberger(full.elements, BlockOrder(nv, keep_from), cap)
    kept: list[Binomial] = []
    for g in block.elements:
        assert g.trail is not None
        if all(e == 0 for e in g.lead[:keep_from]) and all(e == 0 for e in g.trail[:keep_from]):
            kept.append(Binomial(g.lead[keep_from:], g.trail[keep_from:]))
    return buchberger(kept, DegRevLex(nv - keep_from), cap)


def quadrics_in_ideal(seq: CurveSequence) -> list[Binomial]:
    """All degree-2 pure differences in I(C), deduplicated and oriented."""
    nv = seq.n + 1
    order = DegRevLex(nv)
    by_bideg: dict[tuple[int, int], list[Monomial]] = {}
    for i, j in itertools.combinations_with_replacement(range(nv), 2):
        m = tuple((i == t) + (j == t) for t in range(nv))
        by_bideg.setdefault(tuple(bidegree(seq, m)), []).append(m)
    out: set[Binomial] = set()
    for monos in by_bideg.values():
        for a, b in itertools.combinations(monos, 2):
            bi = make_binomial(a, b, order)
            if bi is not None:
                out.add(bi)
    return sorted(out, key=lambda g: (order.key(g.lead), order.key(g.trail)))


def is_generated_by_quadrics(seq: CurveSequence, cap: int | None = None) -> bool:
    """True iff the degree-2 members of I(C) generate the whole ideal."""
    if cap is None:
        cap = default_degree_cap(seq)
    quad_gb = buchberger(quadrics_in_ideal(seq), DegRevLex(seq.n + 1), cap)
    return quad_gb.element_set() == toric_ideal(seq, cap).element_set()


def has_quadratic_gb(seq: CurveSequence, order: TermOrder | None = None,
                     cap: int | None = None) -> bool:
    """True iff the reduced Groebner basis of I(C) under `order` is all quadrics."""
    if cap is None:
        cap = default_degree_cap(seq)
    base = toric_ideal(seq, cap)
    if order is None or order == base.order:
        gb = base
    else:
        gb = buchberger(base.elements, order, cap)
    return all(g.degree == 2 for g in gb.elements)


# -- serialization -----------------------------------------------------------------

def render_gb(gb: GroebnerBasis, seq: CurveSequence | None = None) -> str:
    from .poly import format_binomial
    seq_part = f" seq={seq}" if seq is not None else ""
    lines = [f"# order={gb.order.name} vars={gb.nvars}{seq_part}"]
    lines.extend(format_binomial(g) for g in gb.elements)
    return "\n".join(lines) + "\n"


def parse_gb(text: str) -> GroebnerBasis:
    from .poly import parse_binomial, parse_order
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0]
    assert header.startswith("# order=")
    fields = dict(part.split("=", 1) for part in header[2:].split() if "=" in part)
    nvars = int(fields["vars"])
    order = parse_order(fields["order"], nvars)
    elements = tuple(parse_binomial(ln, nvars) for ln in lines[1:])
    return GroebnerBasis(order, elements, reduced=True)

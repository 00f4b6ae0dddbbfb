"""Term orders, bidegrees, membership, text forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcurve.errors import DimensionMismatch
from mcurve.poly import (
    Binomial,
    BlockOrder,
    DegRevLex,
    YWeighted,
    bidegree,
    compare,
    degrevlex_cheapest,
    format_binomial,
    format_monomial,
    is_member_binomial,
    make_binomial,
    parse_binomial,
    parse_monomial,
    parse_order,
)
from mcurve.seq import CurveSequence, arithmetic_profile


class TestCompare:
    def test_degrevlex_prefers_early_support(self):
        o = DegRevLex(4)
        assert compare(o, (1, 1, 0, 0), (0, 0, 1, 1)) == 1

    def test_degrevlex_alpha_family_orientation(self):
        # lead x_1^alpha x_i beats x_{n-k+i} x_n^q x_{n+1}^d at equal degree
        s = CurveSequence((10, 13, 16, 19, 22))
        p = arithmetic_profile(s)
        o = DegRevLex(6)
        lead = (p.alpha, 1, 0, 0, 0, 0)
        trail = (0, 0, 1, 0, p.q, p.d)
        assert sum(lead) == sum(trail)
        assert compare(o, lead, trail) == 1

    def test_yweighted_dominates(self):
        o = YWeighted(4, 2)  # y = x3
        assert compare(o, (0, 0, 2, 0), (1, 1, 0, 0)) == 1
        assert compare(o, (5, 5, 0, 0), (0, 0, 1, 0)) == -1

    def test_block_order_eliminates(self):
        o = BlockOrder(4, 1)
        # any monomial with x1 beats any monomial without, regardless of degree
        assert compare(o, (1, 0, 0, 0), (0, 3, 3, 3)) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            compare(DegRevLex(3), (1, 0, 0), (1, 0))

    def test_equal(self):
        assert compare(DegRevLex(3), (1, 2, 0), (1, 2, 0)) == 0


def _orders(nvars):
    return [
        DegRevLex(nvars),
        degrevlex_cheapest(nvars, 0),
        BlockOrder(nvars, 1),
        YWeighted(nvars, nvars - 1),
    ]


monos = st.tuples(*([st.integers(0, 6)] * 5))


class TestOrderAxioms:
    @given(a=monos, b=monos, idx=st.integers(0, 3))
    @settings(max_examples=400)
    def test_antisymmetry_and_totality(self, a, b, idx):
        o = _orders(5)[idx]
        assert compare(o, a, b) == -compare(o, b, a)
        assert (compare(o, a, b) == 0) == (a == b)

    @given(a=monos, b=monos, c=monos, idx=st.integers(0, 3))
    @settings(max_examples=400)
    def test_transitivity(self, a, b, c, idx):
        o = _orders(5)[idx]
        if compare(o, a, b) >= 0 and compare(o, b, c) >= 0:
            assert compare(o, a, c) >= 0

    @given(a=monos, b=monos, c=monos, idx=st.integers(0, 3))
    @settings(max_examples=400)
    def test_multiplicativity(self, a, b, c, idx):
        o = _orders(5)[idx]
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert compare(o, a, b) == compare(o, ac, bc)

    @given(a=monos, idx=st.integers(0, 3))
    @settings(max_examples=200)
    def test_one_is_smallest(self, a, idx):
        o = _orders(5)[idx]
        assert compare(o, a, (0, 0, 0, 0, 0)) >= 0


class TestBidegree:
    def test_direct_substitution(self):
        s = CurveSequence((1, 2, 3))
        assert tuple(bidegree(s, (2, 0, 0, 0))) == (2, 4)

    def test_kernel_pair(self):
        s = CurveSequence((1, 2, 3))
        assert bidegree(s, (2, 0, 0, 0)) == bidegree(s, (0, 1, 0, 1))

    def test_alpha_identity_instance(self):
        # alpha*m_1 + m_1 = m_3 + 2 m_5 = 60 for (10,...,22)
        s = CurveSequence((10, 13, 16, 19, 22))
        assert tuple(bidegree(s, (6, 0, 0, 0, 0, 0))) == (60, 72)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            bidegree(CurveSequence((1, 2, 3)), (1, 0, 0))

    @given(
        a=st.tuples(*([st.integers(0, 4)] * 4)),
        b=st.tuples(*([st.integers(0, 4)] * 4)),
    )
    @settings(max_examples=300)
    def test_additivity_and_homogeneity(self, a, b):
        s = CurveSequence((3, 5, 7))
        ab = tuple(x + y for x, y in zip(a, b))
        left = bidegree(s, ab)
        right = (bidegree(s, a)[0] + bidegree(s, b)[0],
                 bidegree(s, a)[1] + bidegree(s, b)[1])
        assert tuple(left) == right
        assert left.s_deg + left.t_deg == sum(ab) * s.mn


class TestMembership:
    def test_twisted_cubic_quadric(self):
        s = CurveSequence((1, 2, 3))
        assert is_member_binomial(s, Binomial((0, 2, 0, 0), (1, 0, 1, 0)))

    def test_quartic_member(self):
        s = CurveSequence((3, 5, 7))
        assert is_member_binomial(s, Binomial((3, 1, 0, 0), (0, 0, 2, 2)))

    def test_non_member(self):
        s = CurveSequence((1, 2, 3))
        assert not is_member_binomial(s, Binomial((1, 1, 0, 0), (0, 1, 0, 1)))

    def test_bare_monomial_is_never_member(self):
        s = CurveSequence((1, 2, 3))
        assert not is_member_binomial(s, Binomial((1, 0, 0, 0), None))


class TestTextForms:
    def test_monomial_round_trip(self):
        m = (3, 1, 0, 0, 0, 0, 2)
        assert format_monomial(m) == "x1^3*x2*x7^2"
        assert parse_monomial("x1^3*x2*x7^2", 7) == m

    def test_unit(self):
        assert format_monomial((0, 0)) == "1"
        assert parse_monomial("1", 2) == (0, 0)

    def test_binomial_round_trip(self):
        b = Binomial((3, 5, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 2, 5))
        text = format_binomial(b)
        assert text == "x1^3*x2^5 - x3*x6^2*x7^5"
        assert parse_binomial(text, 7) == b

    @given(m=st.tuples(*([st.integers(0, 9)] * 6)))
    @settings(max_examples=200)
    def test_round_trip_property(self, m):
        assert parse_monomial(format_monomial(m), 6) == m

    def test_parse_order(self):
        assert parse_order("degrevlex", 5) == DegRevLex(5)
        assert parse_order("yweighted:x3", 5) == YWeighted(5, 2)
        with pytest.raises(ValueError):
            parse_order("lex", 5)


class TestMakeBinomial:
    def test_orients(self):
        o = DegRevLex(4)
        b = make_binomial((1, 0, 1, 0), (0, 2, 0, 0), o)
        assert b == Binomial((0, 2, 0, 0), (1, 0, 1, 0))

    def test_zero(self):
        assert make_binomial((1, 0), (1, 0), DegRevLex(2)) is None

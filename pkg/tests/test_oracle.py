import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import KNOWN_JONES
from strategies import braids
from tlinks.braidcore import BraidWord, Crossing, PDCode, closure_pd
from tlinks.laurent import DELTA, LaurentPoly
from tlinks.lorenz import LorenzVector, lorenz_braid
from tlinks.oracle import (
    CrossingLimitExceeded,
    equivalence_evidence,
    jones_normalized,
    kauffman_bracket,
    merged_bracket,
    state_sum_bracket,
)

TREFOIL = BraidWord(2, (1, 1, 1))


class TestLaurent:
    def test_arithmetic(self):
        a = LaurentPoly({1: 1})
        assert (a + 1) * (a - 1) == LaurentPoly({2: 1, 0: -1})
        assert a ** -2 == LaurentPoly({-2: 1})
        assert LaurentPoly({3: 0}).is_zero()
        assert LaurentPoly({0: 5}) == 5
        assert DELTA.mirror() == DELTA

    def test_inverse_needs_unit_monomial(self):
        with pytest.raises(ValueError):
            LaurentPoly({1: 2}) ** -1
        with pytest.raises(ValueError):
            DELTA ** -1

    def test_format(self):
        assert str(LaurentPoly({-16: -1, -12: 1, -4: 1})) == "-A^-16 + A^-12 + A^-4"
        assert LaurentPoly({0: 2, 1: -3}).format("t") == "2 - 3*t"
        assert str(LaurentPoly()) == "0"


class TestBracket:
    def test_unknot(self):
        assert kauffman_bracket(PDCode((), 1)) == 1

    def test_hopf(self):
        assert kauffman_bracket(closure_pd(BraidWord(2, (1, 1)))) == LaurentPoly({4: -1, -4: -1})

    def test_trefoil(self):
        assert kauffman_bracket(closure_pd(TREFOIL)) == LaurentPoly({-7: 1, -3: -1, 5: -1})

    def test_empty_diagram(self):
        with pytest.raises(ValueError):
            kauffman_bracket(PDCode((), 0))

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            kauffman_bracket(closure_pd(TREFOIL), method="skein")

    def test_crossing_limit(self):
        big = closure_pd(BraidWord(2, (1,) * 25))
        with pytest.raises(CrossingLimitExceeded):
            kauffman_bracket(big)
        with pytest.raises(CrossingLimitExceeded):
            state_sum_bracket(big)
        assert kauffman_bracket(closure_pd(BraidWord(2, (1,) * 24))) is not None
        assert not merged_bracket(big, max_crossings=None).is_zero()

    def test_one_crossing_kink(self):
        pd = PDCode((Crossing(1, 2, 2, 1, 1),))
        assert kauffman_bracket(pd) == state_sum_bracket(pd)

    @settings(max_examples=60, deadline=None)
    @given(braids(max_strands=5, max_len=11))
    def test_evaluators_agree(self, b):
        pd = closure_pd(b)
        assert merged_bracket(pd) == state_sum_bracket(pd)

    @settings(max_examples=30, deadline=None)
    @given(braids(max_strands=5, max_len=12))
    def test_split_union_multiplies_by_delta(self, b):
        wider = b.widen(b.strands + 1)
        assert kauffman_bracket(closure_pd(wider)) == DELTA * kauffman_bracket(closure_pd(b))


class TestJones:
    @pytest.mark.parametrize(
        "braid, name",
        [
            (BraidWord(2, (1,)), "unknot"),
            (BraidWord(1), "unknot"),
            (TREFOIL, "trefoil"),
            (BraidWord(2, (1,) * 5), "cinquefoil"),
            (BraidWord(3, (1, -2, 1, -2)), "figure_eight"),
            (BraidWord(3, (1, 2) * 4), "torus_3_4"),
            (BraidWord(2, (1, 1)), "hopf"),
        ],
    )
    def test_known_values(self, braid, name):
        assert jones_normalized(braid) == KNOWN_JONES[name]

    def test_trefoil_in_a(self):
        assert jones_normalized(TREFOIL) == LaurentPoly({-16: -1, -12: 1, -4: 1})
        assert jones_normalized(TREFOIL.mirror()) == LaurentPoly({16: -1, 12: 1, 4: 1})

    @settings(max_examples=40, deadline=None)
    @given(braids(max_strands=5, max_len=12))
    def test_mirror(self, b):
        assert jones_normalized(b.mirror()) == jones_normalized(b).mirror()

    @settings(max_examples=30, deadline=None)
    @given(braids(max_strands=5, max_len=12), st.integers(0, 12))
    def test_rotation_invariance(self, b, k):
        assert jones_normalized(b.rotate(k)) == jones_normalized(b)

    @settings(max_examples=30, deadline=None)
    @given(braids(max_strands=4, max_len=8), st.integers(1, 3))
    def test_conjugation_invariance(self, b, i):
        if b.strands < 2:
            return
        g = BraidWord(b.strands, (min(i, b.strands - 1),))
        assert jones_normalized(g + b + g.inverse()) == jones_normalized(b)

    def test_stabilization_invariance(self):
        b = BraidWord(3, (1, -2, 1, -2))
        assert jones_normalized(BraidWord(4, b.letters + (3,))) == jones_normalized(b)
        assert jones_normalized(BraidWord(4, b.letters + (-3,))) == jones_normalized(b)

    def test_parallel_matches_sequential(self):
        b = BraidWord(4, (1, -2, 3, 1, 2, -3, 2, 1, -2, 3, 1, 2))
        seq = jones_normalized(b, method="states")
        par = jones_normalized(b, method="states", workers=3)
        assert seq == par and seq.to_pairs() == par.to_pairs()


class TestEquivalence:
    def test_trefoil_vs_lorenz_braid(self):
        v = equivalence_evidence(TREFOIL, lorenz_braid(LorenzVector(((2, 3),))))
        assert v.consistent
        assert v.components == (1, 1)

    def test_mirrors_differ(self):
        v = equivalence_evidence(TREFOIL, TREFOIL.mirror())
        assert v.kind == "distinct"
        assert v.components == (1, 1)

    def test_unknots(self):
        assert equivalence_evidence(BraidWord(2, (1,)), BraidWord(1)).consistent

    def test_component_mismatch(self):
        assert not equivalence_evidence(BraidWord(2, (1, 1)), BraidWord(2)).consistent

    def test_to_dict(self):
        d = equivalence_evidence(TREFOIL, TREFOIL).to_dict()
        assert d["verdict"] == "consistent"
        assert d["jones"][0] == [[-16, -1], [-12, 1], [-4, 1]]

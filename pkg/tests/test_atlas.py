import pytest

from realkit import (
    Formalism,
    GuardExceeded,
    Semantics,
    Verdict,
    brute_signature,
    compare,
    enumerate_kbs,
    is_antichain,
)
from realkit.atlas import all_interpretation_sets

from _util import A, AB, ABC, iset


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_kbs("af", AB)) == 16
        assert sum(1 for _ in enumerate_kbs("adf", AB)) == 256
        assert sum(1 for _ in enumerate_kbs("setaf", AB)) == 64
        assert sum(1 for _ in enumerate_kbs("badf", AB)) == 14 * 14

    def test_distinct(self):
        kbs = list(enumerate_kbs("setaf", AB))
        assert len(set(kbs)) == len(kbs)

    def test_guards(self):
        with pytest.raises(GuardExceeded):
            next(enumerate_kbs("adf", ABC))
        with pytest.raises(GuardExceeded):
            next(enumerate_kbs("badf", ABC))


class TestSignatures:
    def test_unary_examples(self):
        assert set(brute_signature("af", "adm", A)) == {iset(A, "u"), iset(A, "u", "t")}
        assert set(brute_signature("adf", "com", A)) == {iset(A, "u"), iset(A, "t"), iset(A, "f"), iset(A, "u", "t", "f")}
        assert set(brute_signature("af", "mod", A)) == {iset(A), iset(A, "t")}

    def test_str(self):
        assert str(brute_signature("af", "adm", A)) == "{u} {u,t}"

    def test_membership(self):
        sig = brute_signature("af", "adm", AB)
        assert iset(AB, "uu", "tf", "ft") in sig
        assert iset(AB, "tf") not in sig

    def test_no_duplicates(self):
        sig = brute_signature("badf", "adm", AB)
        assert len(set(sig)) == len(sig)

    @pytest.mark.parametrize("sigma", list(Semantics))
    def test_monotone_chain(self, sigma):
        chain = [set(brute_signature(k, sigma, AB)) for k in ("af", "setaf", "badf", "adf")]
        for lower, upper in zip(chain, chain[1:]):
            assert lower <= upper

    def test_shape_invariants(self):
        for kind in Formalism:
            for V in brute_signature(kind, "prf", AB):
                assert is_antichain(V) and len(V) > 0
            for V in brute_signature(kind, "mod", AB):
                assert is_antichain(V)
            for V in brute_signature(kind, "adm", AB):
                assert AB.all_unknown() in V
            for V in brute_signature(kind, "com", AB):
                assert len(V) > 0

    def test_sizes_two_statements(self):
        sizes = {(k, s): len(brute_signature(k, s, AB)) for k in ("af", "adf") for s in ("adm", "com", "prf", "mod")}
        assert sizes[("af", "adm")] == 9 and sizes[("af", "mod")] == 5
        assert sizes[("adf", "adm")] == 90 and sizes[("adf", "mod")] == 16


class TestCompare:
    def test_setaf_below_badf(self):
        c = compare("setaf", "adm", "badf", "adm", A)
        assert c.verdict is Verdict.LEFT_LESS
        assert iset(A, "u", "t", "f") in c.right_only

    def test_adm_com_incomparable(self):
        for kind in Formalism:
            c = compare(kind, "adm", kind, "com", A)
            assert c.verdict is Verdict.INCOMPARABLE
            assert iset(A, "u", "t") in c.left_only
            assert iset(A, "t") in c.right_only

    def test_equal(self):
        c = compare("af", "adm", "setaf", "adm", AB)
        assert c.verdict is Verdict.EQUAL and c.exhaustive

    def test_realize_backed(self):
        W = iset(ABC, "uuu", "ttf", "tft", "ftt")
        c = compare("af", "adm", "setaf", "adm", ABC, candidates=[W])
        assert c.verdict is Verdict.LEFT_LESS
        assert c.right_only == (W,)
        assert not c.exhaustive

    def test_all_interpretation_sets(self):
        sets = list(all_interpretation_sets(A))
        assert len(sets) == 8 and len(set(sets)) == 8

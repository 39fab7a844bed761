import itertools

import pytest

from realkit import (
    Interpretation,
    InterpretationSet,
    ParseError,
    Vocabulary,
    VocabularyMismatch,
    completions,
    is_antichain,
    leq_i,
    lt_i,
    max_i,
    meet_i,
    parse_interpretation,
    truth_join,
    truth_leq,
    truth_meet,
)

from _util import AB, ABC, iset


def p(token, vocab=None):
    vocab = vocab or Vocabulary("abc"[: len(token)])
    return parse_interpretation(token, vocab)


class TestVocabulary:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Vocabulary([])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Vocabulary(["a", "a"])

    def test_order_fixes_bits(self):
        v = Vocabulary(["x", "y", "z"])
        assert [v.bit(s) for s in v] == [4, 2, 1]
        assert v.index("y") == 1

    def test_counts(self):
        assert ABC.n_two_valued == 8
        assert len(list(ABC.interpretations())) == 27
        assert len(list(ABC.two_valued())) == 8


class TestParse:
    def test_positional(self):
        v = p("tfu")
        assert (v["a"], v["b"], v["c"]) == ("t", "f", "u")

    def test_all_unknown(self):
        assert p("uuu") == ABC.all_unknown()

    def test_bad_character(self):
        with pytest.raises(ParseError):
            parse_interpretation("tx", AB)

    def test_bad_length(self):
        with pytest.raises(ParseError):
            parse_interpretation("t", AB)

    def test_token_round_trip(self):
        for v in ABC.interpretations():
            assert parse_interpretation(v.token, ABC) == v

    def test_two_valued_index(self):
        # t = 1, first statement most significant
        assert p("tf").index == 2
        assert p("ff").index == 0
        assert p("tt").index == 3
        with pytest.raises(ValueError):
            p("tu").index


class TestInformationOrder:
    def test_examples(self):
        assert leq_i(p("uu"), p("tf"))
        assert leq_i(p("tu"), p("tf"))
        assert not leq_i(p("tf"), p("ft"))
        assert lt_i(p("tu"), p("tf"))
        assert not lt_i(p("tf"), p("tf"))

    def test_meet_examples(self):
        assert meet_i(p("tf"), p("tf")) == p("tf")
        assert meet_i(p("tf"), p("tt")) == p("tu")
        assert meet_i(p("tf"), p("ft")) == p("uu")

    def test_vocabulary_mismatch(self):
        with pytest.raises(VocabularyMismatch):
            leq_i(p("tf"), parse_interpretation("tf", Vocabulary("xy")))

    def test_partial_order_exhaustive(self):
        vs = list(ABC.interpretations())
        for x in vs:
            assert leq_i(x, x)
        for x, y in itertools.product(vs, repeat=2):
            if leq_i(x, y) and leq_i(y, x):
                assert x == y
        sample = vs[::2]
        for x, y, z in itertools.product(sample, repeat=3):
            if leq_i(x, y) and leq_i(y, z):
                assert leq_i(x, z)

    def test_meet_is_glb(self):
        vs = list(AB.interpretations())
        for x, y in itertools.product(vs, repeat=2):
            m = meet_i(x, y)
            assert leq_i(m, x) and leq_i(m, y)
            for z in vs:
                if leq_i(z, x) and leq_i(z, y):
                    assert leq_i(z, m)


class TestCompletions:
    def test_examples(self):
        assert completions(p("tf")) == iset(AB, "tf")
        assert completions(p("tu")) == iset(AB, "tt", "tf")
        assert len(completions(p("uuu"))) == 8

    def test_meet_of_completions_is_v(self):
        for v in ABC.interpretations():
            comps = list(completions(v))
            assert len(comps) == 2 ** v.token.count("u")
            acc = comps[0]
            for w in comps[1:]:
                acc = meet_i(acc, w)
            assert acc == v


class TestMaxAndAntichain:
    def test_max_examples(self):
        assert max_i(iset(AB, "uu", "tf", "ft")) == iset(AB, "tf", "ft")
        assert max_i(iset(AB, "tf")) == iset(AB, "tf")
        assert max_i(iset(AB)) == iset(AB)

    def test_antichain_examples(self):
        assert is_antichain(iset(AB, "tf", "ft"))
        assert not is_antichain(iset(AB, "uu", "tf"))
        assert is_antichain(iset(AB))

    def test_max_is_antichain_subset(self):
        everything = list(AB.interpretations())
        for bits in range(0, 1 << 9, 7):
            V = InterpretationSet(AB, (v for i, v in enumerate(everything) if bits >> i & 1))
            M = max_i(V)
            assert M <= V
            assert is_antichain(M)
            assert is_antichain(V) == (M == V)


class TestTruthOrder:
    def test_examples(self):
        assert truth_leq(p("ff"), p("tf"))
        assert truth_join(p("tf"), p("ft")) == p("tt")
        assert not truth_leq(p("tf"), p("ft"))
        assert truth_meet(p("tf"), p("ft")) == p("ff")

    def test_requires_two_valued(self):
        with pytest.raises(ValueError):
            truth_leq(p("tu"), p("tt"))

    def test_lattice(self):
        vs = list(ABC.two_valued())
        bottom, top = ABC.all_false(), ABC.all_true()
        for x in vs:
            assert truth_leq(bottom, x) and truth_leq(x, top)
        for x, y in itertools.product(vs, repeat=2):
            j = truth_join(x, y)
            assert truth_leq(x, j) and truth_leq(y, j)
            for z in vs:
                if truth_leq(x, z) and truth_leq(y, z):
                    assert truth_leq(j, z)


class TestInterpretationSet:
    def test_canonical_order(self):
        V = iset(AB, "ft", "tf", "uu")
        assert V.tokens() == ["uu", "tf", "ft"]
        assert str(V) == "{uu,tf,ft}"

    def test_equality_ignores_order(self):
        assert iset(AB, "tf", "ft") == iset(AB, "ft", "tf")
        assert hash(iset(AB, "tf", "ft")) == hash(iset(AB, "ft", "tf"))

    def test_set_algebra(self):
        V, W = iset(AB, "uu", "tf"), iset(AB, "tf", "ft")
        assert V | W == iset(AB, "uu", "tf", "ft")
        assert V - W == iset(AB, "uu")
        assert iset(AB, "tf") <= V

    def test_mixed_vocabularies_rejected(self):
        with pytest.raises(VocabularyMismatch):
            InterpretationSet(AB, [parse_interpretation("t", Vocabulary("a"))])

    def test_updated(self):
        v = p("uu").updated("b", "t")
        assert v == p("ut")
        assert isinstance(v, Interpretation)

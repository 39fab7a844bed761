"""Randomized property suites over small vocabularies."""

from hypothesis import given, settings
from hypothesis import strategies as st

from realkit import (
    Adf,
    Af,
    Badf,
    CharRelation,
    Formalism,
    Interpretation,
    InterpretationSet,
    Setaf,
    Vocabulary,
    adf_from_char,
    char_from_adf,
    classify_fragment,
    format_interpretation_set,
    format_kb,
    gamma,
    is_characterization,
    leq_i,
    max_i,
    meet_i,
    parse_interpretation_set,
    parse_kb,
    propagate_fixpoint,
    propagate_formalism,
    propagate_semantics,
    semantics,
)
from realkit.interp import cube

VOCABS = {n: Vocabulary("abc"[:n]) for n in (1, 2, 3)}

sizes = st.integers(1, 3)


@st.composite
def interpretations(draw, n):
    tm, fm = draw(st.sampled_from(cube(n)))
    return Interpretation(VOCABS[n], tm, fm)


@st.composite
def interp_sets(draw, n):
    members = draw(st.sets(st.sampled_from(cube(n))))
    return InterpretationSet.from_masks(VOCABS[n], members)


@st.composite
def adfs(draw, n):
    masks = draw(st.lists(st.integers(0, (1 << (1 << n)) - 1), min_size=n, max_size=n))
    return Adf.from_masks(VOCABS[n], masks)


@st.composite
def relations(draw, n):
    size = 1 << n
    full = (1 << n) - 1
    pos = draw(st.lists(st.integers(0, full), min_size=size, max_size=size))
    neg = draw(st.lists(st.integers(0, full), min_size=size, max_size=size))
    return CharRelation(VOCABS[n], tuple(pos), tuple(neg))


@given(st.data())
def test_meet_commutes_and_is_below(data):
    n = data.draw(sizes)
    x, y = data.draw(interpretations(n)), data.draw(interpretations(n))
    m = meet_i(x, y)
    assert m == meet_i(y, x)
    assert leq_i(m, x) and leq_i(m, y)
    assert meet_i(x, x) == x


@given(st.data())
def test_gamma_monotone(data):
    n = data.draw(sizes)
    D = data.draw(adfs(n))
    x, y = data.draw(interpretations(n)), data.draw(interpretations(n))
    lo = meet_i(x, y)
    assert leq_i(gamma(D, lo), gamma(D, x))
    assert leq_i(gamma(D, lo), gamma(D, y))


@settings(max_examples=60)
@given(st.data())
def test_semantics_invariants(data):
    n = data.draw(sizes)
    D = data.draw(adfs(n))
    adm, com, prf, mod = (semantics(D, s) for s in ("adm", "com", "prf", "mod"))
    assert VOCABS[n].all_unknown() in adm
    assert com <= adm and len(com) > 0
    assert prf == max_i(adm)
    assert mod <= com and all(v.is_two_valued for v in mod)


@settings(max_examples=60)
@given(st.data())
def test_characterization_round_trip(data):
    n = data.draw(sizes)
    D = data.draw(adfs(n))
    f = char_from_adf(D)
    assert adf_from_char(f) == D
    for sigma in ("adm", "com", "mod"):
        assert is_characterization(f, semantics(D, sigma), sigma)


@settings(max_examples=80)
@given(st.data())
def test_propagators_monotone(data):
    n = data.draw(st.integers(1, 2))
    V = data.draw(interp_sets(n))
    F2 = data.draw(relations(n))
    # F1 is an arbitrary sub-relation of F2
    keep = data.draw(st.lists(st.booleans(), min_size=2 << n, max_size=2 << n))
    F1 = CharRelation(VOCABS[n], tuple(p & -int(k) for p, k in zip(F2.pos, keep)),
                      tuple(q & -int(k) for q, k in zip(F2.neg, keep[1 << n:])))
    assert F1 <= F2
    for sigma in ("adm", "com", "mod"):
        assert propagate_semantics(sigma, V, F1) <= propagate_semantics(sigma, V, F2)
    for kind in Formalism:
        assert propagate_formalism(kind, V, F1) <= propagate_formalism(kind, V, F2)


@settings(max_examples=60)
@given(st.data())
def test_fixpoint_idempotent(data):
    n = data.draw(st.integers(1, 3))
    V = data.draw(interp_sets(n))
    kind = data.draw(st.sampled_from(list(Formalism)))
    sigma = data.draw(st.sampled_from(["adm", "com", "mod"]))
    F, status = propagate_fixpoint(kind, sigma, V, CharRelation.empty(VOCABS[n]))
    if status.value == "incoherent":
        return
    assert set(propagate_semantics(sigma, V, F)) <= set(F)
    assert set(propagate_formalism(kind, V, F)) <= set(F)


@given(st.data())
def test_interpretation_set_file_round_trip(data):
    n = data.draw(sizes)
    V = data.draw(interp_sets(n))
    text = format_interpretation_set(V)
    assert parse_interpretation_set(text) == V
    assert format_interpretation_set(parse_interpretation_set(text)) == text


@given(st.data())
def test_kb_file_round_trip(data):
    n = data.draw(sizes)
    vocab = VOCABS[n]
    names = list(vocab)
    kind = data.draw(st.sampled_from(list(Formalism)))
    if kind is Formalism.AF:
        kb = Af(vocab, data.draw(st.frozensets(st.tuples(st.sampled_from(names), st.sampled_from(names)))))
    elif kind is Formalism.SETAF:
        group = st.frozensets(st.sampled_from(names), min_size=1)
        kb = Setaf(vocab, data.draw(st.frozensets(st.tuples(group, st.sampled_from(names)))))
    else:
        D = data.draw(adfs(n))
        if kind is Formalism.BADF:
            if Formalism.BADF not in classify_fragment(D):
                return
            kb = Badf.from_adf(D)
        else:
            kb = D
    text = format_kb(kb)
    assert parse_kb(text, kind) == kb
    assert format_kb(parse_kb(text, kind)) == text

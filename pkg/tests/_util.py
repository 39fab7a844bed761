from realkit import Adf, CharFunction, InterpretationSet, Vocabulary

AB = Vocabulary("ab")
ABC = Vocabulary("abc")
A = Vocabulary("a")


def iset(vocab, *tokens):
    return InterpretationSet(vocab, tokens)


def mutual_attack_adf():
    return Adf.from_predicates(AB, {"a": lambda m: not m["b"], "b": lambda m: not m["a"]})


def iff_adf():
    """phi_a = a, phi_b = a <-> b"""
    return Adf.from_predicates(AB, {"a": lambda m: m["a"], "b": lambda m: m["a"] == m["b"]})


ADM_WITNESS_F = {
    "ttt": "ftt", "ttf": "tft", "tft": "ttt", "tff": "tff",
    "ftt": "ftf", "ftf": "ftt", "fft": "ttf", "fff": "ftf",
}
COM_WITNESS_F = {"ttf": "tff", "ftt": "fft", "ftf": "ftf", "fff": "ftf"}


def adm_witness_f():
    return CharFunction.from_mapping(ABC, ADM_WITNESS_F)


def com_witness_f():
    return CharFunction.from_mapping(ABC, COM_WITNESS_F, default="fff")


def adm_witness_adf():
    return Adf.from_predicates(ABC, {
        "a": lambda m: (m["a"] and m["b"] and not m["c"]) or (m["a"] and not m["b"])
        or (not m["a"] and not m["b"] and m["c"]),
        "b": lambda m: (m["a"] and m["c"]) or (not m["a"] and m["b"])
        or (not m["a"] and not m["b"] and not m["c"]),
        "c": lambda m: (m["a"] and m["b"]) or (not m["a"] and m["b"] and not m["c"])
        or (not m["b"] and m["c"]),
    })

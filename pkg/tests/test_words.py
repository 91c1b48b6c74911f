import random
from itertools import product

import pytest

from veval.sampling import random_vtable, random_word
from veval.tables import TOO_SHORT, Value, apply, equals, inverse, validate_table
from veval.words import (Gen, GenSet, GenWord, InputClass, MalformedEncoding,
                         Tau, UnknownGenerator, classify_input, decode_tau,
                         default_genset, encode_tau, evaluate,
                         evaluate_universal, long_input_threshold, parse_word,
                         sequential_apply, tau_table, word_problem,
                         word_problem_via_eval, word_to_element)

GAMMA = validate_table([("0", "00"), ("10", "01"), ("11", "1")])
GSET = GenSet({"g": GAMMA})


def W(text):
    return parse_word(text)


def test_tau_table():
    assert tau_table(1).pairs == (("00", "00"), ("01", "10"),
                                  ("10", "01"), ("11", "11"))
    assert apply(tau_table(2), "1") == TOO_SHORT
    for bits in product("01", repeat=4):
        z = "".join(bits)
        assert apply(tau_table(2), "010" + z) == Value("001" + z)


def test_tau_encoding_roundtrip():
    for i in range(1, 65):
        assert decode_tau(encode_tau(i)) == Tau(i)
    assert encode_tau(2) == "abbba"
    assert decode_tau("abba") == Tau(1)
    for bad in ("aba", "abb", "ba", "abbab"):
        with pytest.raises(MalformedEncoding):
            decode_tau(bad)


def test_parse_word():
    w = W("g g^-1 t3 abbba")
    assert w.tokens == (Gen("g"), Gen("g", True), Tau(3), Tau(2))
    assert w.size == 1 + 1 + 4 + 3
    assert w.maxindex_tau == 4
    assert len(W("")) == 0


def test_word_to_element():
    assert word_to_element(W("g g^-1"), GSET).pairs == (("", ""),)
    assert word_to_element(GenWord(()), GSET).pairs == (("", ""),)
    assert word_to_element(GenWord((Tau(1), Tau(1))), GSET).pairs == (("", ""),)
    with pytest.raises(UnknownGenerator):
        word_to_element(W("nope"), GSET)


def test_sequential_apply():
    assert sequential_apply(W("g"), "10", GSET) == Value("01")
    # short witness: the composite is the identity but the pipeline fails at the empty string
    w = GenWord((Gen("g", True), Gen("g")))
    assert sequential_apply(w, "", GSET) is None
    assert word_to_element(w, GSET).pairs == (("", ""),)
    assert sequential_apply(GenWord((Tau(1),)), "0", GSET) is None


def test_classify_input():
    w = GenWord((Gen("g", True), Gen("g")))
    assert classify_input(w, "", GSET) is InputClass.SHORT
    assert classify_input(W("g"), "10", GSET) is InputClass.LONG
    assert classify_input(W("g"), "", GSET) is InputClass.TOO_SHORT


def test_long_input_threshold():
    assert GSET.c_gamma == 2
    assert long_input_threshold(W("g g g"), GSET) == 6
    assert long_input_threshold(W("t4 g"), GSET) == 10
    assert long_input_threshold(GenWord(()), GSET) == 0
    rng = random.Random(3)
    for _ in range(300):
        w = random_word(rng, GSET, rng.randint(0, 4), tau_max=3)
        bound = long_input_threshold(w, GSET)
        x = "".join(rng.choice("01") for _ in range(bound))
        assert classify_input(w, x, GSET) is InputClass.LONG


def test_evaluate():
    w = GenWord((Gen("g", True), Gen("g")))
    assert evaluate(w, "", "", GSET)
    assert evaluate(W("g"), "10", "01", GSET)
    assert not evaluate(W("g"), "", "", GSET)


def naive_universal(w, x, y, G):
    k = long_input_threshold(w, G) - len(x)
    if k < 0:
        return sequential_apply(w, x, G) == Value(y)
    return all(sequential_apply(w, x + "".join(z), G) == Value(y + "".join(z))
               for z in product("01", repeat=k))


def test_evaluate_universal():
    w = GenWord((Gen("g", True), Gen("g")))
    assert evaluate_universal(w, "", "", GSET)
    assert evaluate_universal(W("g"), "10", "01", GSET)
    assert not evaluate_universal(W("g"), "10", "10", GSET)
    rng = random.Random(9)
    strs = ["", "0", "1", "00", "01", "110"]
    for _ in range(300):
        w = random_word(rng, GSET, rng.randint(0, 3), tau_max=2)
        x, y = rng.choice(strs), rng.choice(strs)
        out = sequential_apply(w, x, GSET)
        if out is not None and rng.random() < 0.5:
            y = out.string
        assert evaluate_universal(w, x, y, GSET) == naive_universal(w, x, y, GSET)
        assert evaluate_universal(w, x, y, GSET) == evaluate(w, x, y, GSET)


def test_sequential_yes_implies_long():
    rng = random.Random(11)
    for _ in range(300):
        w = random_word(rng, GSET, rng.randint(0, 4))
        x = "".join(rng.choice("01") for _ in range(rng.randint(0, 4)))
        out = sequential_apply(w, x, GSET)
        cls = classify_input(w, x, GSET)
        if out is not None:
            assert cls is InputClass.LONG
            assert evaluate(w, x, out.string, GSET)
        if cls is InputClass.LONG:
            assert out is not None


def test_word_problem():
    assert word_problem(W("g g^-1"), GSET)
    assert not word_problem(GenWord((Tau(1),)), GSET)
    rng = random.Random(13)
    for _ in range(500):
        w = random_word(rng, GSET, rng.randint(0, 4), tau_max=2)
        assert word_problem(w, GSET) == evaluate(w, "", "", GSET)


def test_word_problem_via_eval():
    assert word_problem_via_eval(W("g g^-1"), 3, GSET)
    assert not word_problem_via_eval(GenWord((Tau(1),)), 2, GSET)
    assert not evaluate(GenWord((Tau(1),)), "01", "01", GSET)
    rng = random.Random(15)
    for _ in range(100):
        w = random_word(rng, GSET, rng.randint(0, 3), tau_max=2)
        assert word_problem_via_eval(w, 0, GSET) == evaluate(w, "", "", GSET)
        for N in (1, 2):
            assert word_problem_via_eval(w, N, GSET) == word_problem(w, GSET)


# The default set generates V: frozen witness words reproduce the classical
# four-element generating set (the two F generators, the rotation of the top
# three cylinders, and a cylinder swap conjugate to the depth-2 leaf swap).

X0 = validate_table([("00", "0"), ("01", "10"), ("1", "11")])
X1 = validate_table([("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")])
C3 = validate_table([("0", "10"), ("10", "11"), ("11", "0")])
SWAP_0_10 = validate_table([("0", "10"), ("10", "0"), ("11", "11")])
PI0 = validate_table([("00", "01"), ("01", "00"), ("1", "1")])

WITNESSES = {
    "x0": "a b b b a^-1 b^-1 b^-1 a^-1 b b",
    "x1": "a",
    "rotation": "a b b b a^-1 b^-1 b^-1 a^-1 b b b a b^-1 a",
    "swap(0,10)": "b a b^-1 a b b a b^-1 a",
}


def test_default_genset_generates_v():
    G = default_genset()
    targets = {"x0": X0, "x1": X1, "rotation": C3, "swap(0,10)": SWAP_0_10}
    for name, table in targets.items():
        got = word_to_element(parse_word(WITNESSES[name]), G)
        assert equals(got, table), name
    # the classical fourth generator is an x0-conjugate of the found swap
    from veval.tables import compose

    assert equals(compose(inverse(X0), compose(SWAP_0_10, X0)), PI0)


def test_genset_inverse_resolution():
    G = default_genset()
    a = G.resolve(Gen("a"))
    ai = G.resolve(Gen("a", True))
    assert equals(inverse(a), ai)
    assert G.resolve(Tau(2)).pairs == tau_table(2).pairs
    with pytest.raises(UnknownGenerator):
        G.resolve(Gen("zz"))
    no_tau = GenSet({"g": GAMMA}, allow_tau=False)
    with pytest.raises(UnknownGenerator):
        no_tau.resolve(Tau(1))

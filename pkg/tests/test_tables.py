import random
from itertools import product

import pytest

from veval.codes import PrefixViolation, validate_prefix_code
from veval.tables import (IDENTITY, NO_PREFIX, TOO_SHORT, DepthTooSmall,
                          NotBijective, NotMaximal, Value, action_at_depth,
                          apply, compose, equals, eval_oracle, inverse,
                          is_identity, maximal_extension, restrict_to_code,
                          transitive_element, validate_table)
from veval.sampling import random_vtable

GAMMA = validate_table([("0", "00"), ("10", "01"), ("11", "1")])
BITSWAP = validate_table([("0", "1"), ("1", "0")])


def test_validate_table():
    assert GAMMA.size == 3 and GAMMA.maxlen == 2
    with pytest.raises(NotBijective):
        validate_table([("0", "0"), ("1", "0")])
    with pytest.raises(NotMaximal):
        validate_table([("0", "00"), ("10", "01")])
    with pytest.raises(PrefixViolation):
        validate_table([("0", "0"), ("01", "1")])
    validate_table([("0", "00"), ("10", "01")], relaxed=True)


def test_apply():
    assert apply(GAMMA, "101") == Value("011")
    assert apply(GAMMA, "1") == TOO_SHORT
    assert apply(GAMMA, "0") == Value("00")
    relaxed = validate_table([("00", "0")], relaxed=True)
    assert apply(relaxed, "10") == NO_PREFIX


def test_maximal_extension():
    t = validate_table([("00", "10"), ("01", "11"), ("1", "0")])
    assert maximal_extension(t).pairs == (("0", "1"), ("1", "0"))
    # depth-2 actions agree
    assert action_at_depth(t, 2) == action_at_depth(maximal_extension(t), 2)
    assert maximal_extension(BITSWAP).pairs == BITSWAP.pairs
    t = validate_table([("0", "0"), ("10", "10"), ("11", "11")])
    assert maximal_extension(t).pairs == (("", ""),)


def test_extension_order_independent():
    rng = random.Random(4)
    for _ in range(100):
        t = random_vtable(rng, 3)
        # refine a random pair into its two children, in shuffled pair order
        pairs = list(t.pairs)
        p, q = pairs.pop(rng.randrange(len(pairs)))
        pairs += [(p + "0", q + "0"), (p + "1", q + "1")]
        rng.shuffle(pairs)
        split = validate_table(pairs)
        assert maximal_extension(split).pairs == maximal_extension(t).pairs


def test_compose():
    assert compose(GAMMA, inverse(GAMMA)).pairs == (("", ""),)
    assert compose(IDENTITY, GAMMA).pairs == maximal_extension(GAMMA).pairs
    # double application against the pointwise oracle at depth 4
    gg = compose(GAMMA, GAMMA)
    for bits in product("01", repeat=4):
        x = "".join(bits)
        one = apply(GAMMA, x)
        two = apply(GAMMA, one.string)
        assert apply(gg, x) == two


def test_compose_group_laws_sampled():
    rng = random.Random(5)
    for _ in range(200):
        f, g, h = (random_vtable(rng, 3) for _ in range(3))
        assert equals(compose(compose(f, g), h), compose(f, compose(g, h)))
        assert is_identity(compose(f, inverse(f)))
        assert equals(inverse(compose(f, g)),
                      compose(inverse(g), inverse(f)))
        assert inverse(inverse(f)).pairs == f.pairs


def test_inverse():
    assert inverse(BITSWAP).pairs == BITSWAP.pairs
    assert inverse(IDENTITY).pairs == IDENTITY.pairs
    assert inverse(GAMMA).pairs == (("00", "0"), ("01", "10"), ("1", "11"))


def test_is_identity():
    assert is_identity(validate_table([("0", "0"), ("10", "10"), ("11", "11")]))
    assert not is_identity(BITSWAP)
    assert is_identity(IDENTITY)


def test_equals():
    split = validate_table([("00", "000"), ("01", "001"), ("10", "01"), ("11", "1")])
    assert equals(split, GAMMA)
    assert not equals(IDENTITY, BITSWAP)
    rng = random.Random(6)
    for _ in range(100):
        f, g = random_vtable(rng, 3), random_vtable(rng, 3)
        L = max(f.maxlen, g.maxlen)
        assert equals(f, g) == (action_at_depth(f, L) == action_at_depth(g, L))


def test_action_at_depth():
    assert action_at_depth(IDENTITY, 2) == {x: x for x in ("00", "01", "10", "11")}
    assert action_at_depth(BITSWAP, 1) == {"0": "1", "1": "0"}
    act = action_at_depth(GAMMA, 2)
    assert act == {"00": "000", "01": "001", "10": "01", "11": "1"}
    assert len(set(act.values())) == len(act)
    with pytest.raises(DepthTooSmall):
        action_at_depth(GAMMA, 1)


def test_eval_oracle():
    assert eval_oracle(IDENTITY, "01", "01")
    assert eval_oracle(BITSWAP, "0", "1")
    assert not eval_oracle(GAMMA, "0", "01")
    rng = random.Random(7)
    for _ in range(60):
        f = random_vtable(rng, 3)
        for x in ("", "0", "10", "011"):
            out = apply(maximal_extension(f), x)
            for y in ("", "0", "10", "011"):
                assert eval_oracle(f, x, y) == (out == Value(y))


def test_restrict_to_code():
    B = validate_prefix_code(["0", "1"])
    assert restrict_to_code(IDENTITY, B).pairs == (("0", "0"), ("1", "1"))
    deep = validate_prefix_code(["00", "01", "10", "11"])
    got = restrict_to_code(GAMMA, deep)
    assert got.pairs == (("00", "000"), ("01", "001"), ("10", "01"), ("11", "1"))
    for bits in product("01", repeat=3):
        x = "".join(bits)
        assert apply(got, x) == apply(GAMMA, x)
    assert restrict_to_code(BITSWAP, B).pairs == BITSWAP.pairs


def test_transitive_element():
    t = transitive_element("0", "1")
    assert t.pairs == (("0", "1"), ("1", "0")) and t.size == 2
    t = transitive_element("11", "0")
    assert t.size == 3 and eval_oracle(t, "11", "0")
    t = transitive_element("0", "0")
    assert t.size == 2 and ("0", "0") in t.pairs
    rng = random.Random(8)
    for _ in range(50):
        u = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        t = transitive_element(u, v)
        assert t.size == 1 + max(len(u), len(v))
        assert eval_oracle(t, u, v)

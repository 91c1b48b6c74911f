from fractions import Fraction
from itertools import product

import pytest

from veval.codes import (EmptyInput, PrefixViolation, complement,
                         complement_single, equalize_complements, is_prefix,
                         validate_prefix_code)


def bitstrings(maxlen):
    out = [""]
    for L in range(1, maxlen + 1):
        out += ["".join(b) for b in product("01", repeat=L)]
    return out


def prefix_free(strings):
    return not any(u != v and v.startswith(u) for u in strings for v in strings)


def test_is_prefix():
    assert is_prefix("", "01")
    assert is_prefix("01", "01")
    assert not is_prefix("10", "01")


def test_validate_prefix_code():
    P = validate_prefix_code(["0", "10", "11"])
    assert P.kraft() == 1 and P.is_maximal()
    with pytest.raises(PrefixViolation):
        validate_prefix_code(["0", "01"])
    single = validate_prefix_code(["01"])
    assert single.kraft() == Fraction(1, 4) and not single.is_maximal()


def test_complement_examples():
    P = validate_prefix_code(["01"])
    Q = complement(P)
    assert Q.members == ("00", "1")
    # independent oracle: the union is maximal and prefix-free
    union = P.members + Q.members
    assert prefix_free(union)
    assert validate_prefix_code(union).kraft() == 1

    assert complement(validate_prefix_code(["0", "10", "11"])).members == ()
    assert complement(validate_prefix_code([])).members == ("",)


def test_complement_single_examples():
    assert set(complement_single("11")) == {"0", "10"}
    assert validate_prefix_code(["11", "0", "10"]).kraft() == 1
    assert complement_single("0").members == ("1",)
    assert set(complement_single("010")) == {"1", "00", "011"}
    assert prefix_free(("010",) + complement_single("010").members)
    with pytest.raises(EmptyInput):
        complement_single("")


def test_complement_single_matches_set_complement():
    for u in bitstrings(6):
        if u:
            assert set(complement_single(u)) == set(
                complement(validate_prefix_code([u])))
            assert len(complement_single(u)) == len(u)
            assert complement_single(u).maxlen == len(u)


def test_equalize_complements():
    qu, qv = equalize_complements("11", "0")
    assert qu.members == ("0", "10") and len(qv) == 2
    assert validate_prefix_code(("0",) + qv.members).kraft() == 1
    assert equalize_complements("0", "1") == (
        validate_prefix_code(["1"]), validate_prefix_code(["0"]))
    qu, qv = equalize_complements("1", "000")
    assert len(qu) == len(qv) == 3
    assert validate_prefix_code(("1",) + qu.members).kraft() == 1
    assert validate_prefix_code(("000",) + qv.members).kraft() == 1


def all_codes(maxlen):
    def at(prefix, depth):
        if depth == 0:
            return [[], [prefix]]
        out = [[prefix]]
        for left in at(prefix + "0", depth - 1):
            for right in at(prefix + "1", depth - 1):
                out.append(left + right)
        return out
    return at("", maxlen)


def test_complement_invariants_exhaustive():
    for members in all_codes(3):
        P = validate_prefix_code(members)
        Q = complement(P)
        union = P.members + Q.members
        assert prefix_free(union)
        assert validate_prefix_code(union).kraft() == 1
        assert not set(P) & set(Q)
        if P.members and not P.is_maximal():
            assert Q.members and Q.maxlen <= P.maxlen


def test_prefix_order_matches_bounded_ideal_inclusion():
    strings = bitstrings(6)
    for u in strings:
        for v in strings:
            exts = ["".join(b) for b in product("01", repeat=8 - len(v))]
            assert is_prefix(u, v) == all(is_prefix(u, v + e) for e in exts)


def test_outputs_deterministic():
    P = validate_prefix_code(["01", "000"])
    assert complement(P).members == complement(P).members
    assert complement(P).members == tuple(sorted(complement(P).members))

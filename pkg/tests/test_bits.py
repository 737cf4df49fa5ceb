import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from isolabel.bits import (
    BitString,
    LabelDecodeError,
    decode_runs,
    encode_runs,
    pack_trits,
    read_fixed,
    read_gamma,
    unpack_trits,
    write_fixed,
    write_gamma,
)
from isolabel.bounds import trit_width


def bits(s):
    return BitString.from_str(s)


@pytest.mark.parametrize("value,width,expected", [(3, 4, "0011"), (0, 1, "0"), (0, 0, "")])
def test_write_fixed(value, width, expected):
    assert str(write_fixed(value, width)) == expected


def test_write_fixed_overflow():
    with pytest.raises(ValueError):
        write_fixed(4, 2)


@pytest.mark.parametrize("value,expected", [(1, "1"), (2, "010"), (5, "00101")])
def test_gamma(value, expected):
    assert str(write_gamma(value)) == expected
    assert read_gamma(bits(expected).cursor()) == value


def test_gamma_rejects_zero():
    with pytest.raises(ValueError):
        write_gamma(0)
    with pytest.raises(LabelDecodeError):
        read_gamma(bits("000").cursor())


@pytest.mark.parametrize("mags,expected", [((1, 0, 2), "101100"), ((), ""), ((0, 0, 0), "111")])
def test_runs(mags, expected):
    assert str(encode_runs(mags)) == expected
    assert decode_runs(bits(expected).cursor(), len(mags)) == list(mags)


def test_runs_need_a_leading_one():
    with pytest.raises(LabelDecodeError):
        decode_runs(bits("0110").cursor(), 2)


@pytest.mark.parametrize("trits,expected", [((), ""), ((2, 1), "0111"), ((1, 1, 1), "01101")])
def test_pack_trits(trits, expected):
    assert str(pack_trits(trits)) == expected
    assert unpack_trits(bits(expected).cursor(), len(trits)).tolist() == list(trits)


def test_trit_width_matches_log3():
    for m in range(1, 200):
        assert trit_width(m) == (3**m - 1).bit_length()


def test_unpack_rejects_out_of_range_value():
    # 3^2 = 9 fits in the 4-bit field but is not a 2-trit number
    with pytest.raises(LabelDecodeError):
        unpack_trits(bits("1001").cursor(), 2)


def test_truncated_read():
    with pytest.raises(LabelDecodeError):
        read_fixed(bits("01").cursor(), 3)


def test_hex_padding_and_roundtrip():
    b = bits("1011")
    assert b.to_hex() == "b0"
    assert BitString.from_hex("b0", 4) == b
    with pytest.raises(ValueError):
        BitString.from_hex("b1", 4)


def test_concat_flip_index():
    b = bits("10") + bits("011")
    assert str(b) == "10011" and len(b) == 5
    assert [b[i] for i in range(5)] == [1, 0, 0, 1, 1]
    assert str(b.flip(1)) == "11011"
    assert str(BitString.concat([])) == ""
    assert BitString.from_bits(np.array([1, 0, 1])) == bits("101")


@given(st.text(alphabet="01", max_size=80))
def test_string_and_hex_roundtrip(s):
    b = bits(s)
    assert str(b) == s
    assert BitString.from_hex(b.to_hex(), len(b)) == b


@given(st.integers(1, 10**12))
def test_gamma_roundtrip(v):
    cur = (write_gamma(v) + bits("1")).cursor()
    assert read_gamma(cur) == v
    assert cur.remaining == 1


@given(st.lists(st.integers(0, 20), max_size=40))
def test_runs_roundtrip(mags):
    cur = encode_runs(mags).cursor()
    assert decode_runs(cur, len(mags)) == mags
    assert cur.at_end()


@given(st.lists(st.integers(0, 2), max_size=300))
def test_trits_roundtrip(trits):
    packed = pack_trits(trits)
    assert len(packed) == trit_width(len(trits))
    assert unpack_trits(packed.cursor(), len(trits)).tolist() == trits

import pytest
from hypothesis import given
import hypothesis.strategies as st

from lattower.data import ChainPosition, ExitCode, SlotClass
from lattower.errors import (
    ChainLengthMismatch,
    DegreeTooSmall,
    IllegalChainPosition,
    NegativeExponent,
    SpecParseError,
    TooLarge,
)
from lattower.group_spec import (
    all_specs,
    chain,
    chain_iso,
    check_position,
    format_spec,
    make_spec,
    order,
    parse_spec,
    position_order,
)

exponent_maps = st.dictionaries(
    st.integers(min_value=3, max_value=9), st.integers(min_value=0, max_value=3), max_size=4
)


def test_slots_follow_degree_then_copy():
    spec = make_spec({4: 2, 3: 2})
    assert spec.t == 4
    assert spec.a4 == 2 and spec.b == 2
    assert [slot.label for slot in spec.slots] == ["(3,1)", "(3,2)", "(4,1)", "(4,2)"]
    assert spec.slot_ids(SlotClass.A) == (2, 3)
    assert spec.slot_ids(SlotClass.B) == (0, 1)


def test_parse_and_format():
    spec = parse_spec("S4^2*S3^2")
    assert spec == make_spec({3: 2, 4: 2})
    assert format_spec(spec) == "S4^2*S3^2"
    assert format_spec(parse_spec(" s3 * S3 * S3 ")) == "S3^3"
    assert format_spec(parse_spec("1")) == "1"
    assert parse_spec("1").t == 0


@given(exponent_maps)
def test_format_parse_round_trip(exponents):
    spec = make_spec(exponents)
    assert parse_spec(format_spec(spec)) == spec


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("S3^", 2), ("S3+S4", 2), ("T3", 0), ("S3**S4", 3)],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == position
    assert info.value.code == ExitCode.PARSE


def test_parse_position_ignores_whitespace():
    with pytest.raises(SpecParseError) as info:
        parse_spec("S3 * x")
    assert info.value.position == 5


def test_degree_and_exponent_checks():
    with pytest.raises(DegreeTooSmall):
        parse_spec("S2")
    with pytest.raises(DegreeTooSmall):
        make_spec({2: 1})
    with pytest.raises(NegativeExponent):
        make_spec({3: -1})
    with pytest.raises(TooLarge) as info:
        make_spec({25: 1})
    assert info.value.code == ExitCode.BOUND
    assert make_spec({2: 0, 3: 1}) == make_spec({3: 1})


def test_orders():
    assert order(parse_spec("S3^3")) == 216
    assert order(parse_spec("S4^2*S3^2")) == 24 * 24 * 6 * 6
    assert order(parse_spec("1")) == 1


def test_chains():
    assert chain(3) == [ChainPosition.TRIV, ChainPosition.ALT, ChainPosition.FULL]
    assert chain(4) == [ChainPosition.TRIV, ChainPosition.V, ChainPosition.ALT, ChainPosition.FULL]
    assert len(chain(7)) == 3
    with pytest.raises(DegreeTooSmall):
        chain(2)


def test_chain_iso():
    assert chain_iso(3, 5) == {
        ChainPosition.TRIV: ChainPosition.TRIV,
        ChainPosition.ALT: ChainPosition.ALT,
        ChainPosition.FULL: ChainPosition.FULL,
    }
    assert chain_iso(4, 4)[ChainPosition.V] == ChainPosition.V
    with pytest.raises(ChainLengthMismatch):
        chain_iso(3, 4)


def test_positions():
    assert position_order(4, ChainPosition.V) == 4
    assert position_order(5, ChainPosition.ALT) == 60
    assert position_order(3, ChainPosition.TRIV) == 1
    assert check_position(4, ChainPosition.V) == ChainPosition.V
    with pytest.raises(IllegalChainPosition):
        check_position(3, ChainPosition.V)


def test_all_specs():
    specs = list(all_specs(2, (3, 4)))
    assert [format_spec(s) for s in specs] == ["1", "S3", "S4", "S3^2", "S4*S3", "S4^2"]


def test_zero_multiplicities_are_dropped_before_the_degree_check():
    assert parse_spec("S2^0*S3") == make_spec({2: 0, 3: 1}) == parse_spec("S3")
    assert parse_spec("S1^0") == parse_spec("1")
    assert parse_spec("S4^0*S3^2") == parse_spec("S3^2")

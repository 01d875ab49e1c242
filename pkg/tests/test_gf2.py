import pytest
from hypothesis import given
import hypothesis.strategies as st

from lattower import gf2
from lattower.errors import BadCoordinate, WidthMismatch
from lattower.gf2 import SignVector, Subspace


@st.composite
def subspaces(draw, width=None):
    width = draw(st.integers(min_value=0, max_value=12)) if width is None else width
    vectors = draw(st.lists(st.integers(min_value=0, max_value=(1 << width) - 1), max_size=8))
    return gf2.span(width, vectors)


@st.composite
def subspace_pairs(draw):
    width = draw(st.integers(min_value=0, max_value=12))
    return draw(subspaces(width)), draw(subspaces(width))


def test_bitstrings_list_coordinate_zero_first():
    assert gf2.to_bitstring(0b011, 3) == "110"
    assert gf2.from_bitstring("110") == SignVector(3, 0b011)
    with pytest.raises(ValueError):
        gf2.from_bitstring("12")


def test_signs():
    vector = SignVector(3, 0b101)
    assert gf2.to_signs(vector) == (-1, 1, -1)
    assert gf2.from_signs((-1, 1, -1)) == vector
    with pytest.raises(ValueError):
        gf2.from_signs((1, 0))


def test_span_is_canonical():
    first = gf2.span(3, [0b011, 0b110])
    second = gf2.span(3, [0b101, 0b011, 0b110])
    assert first == second
    assert first.dim == 2
    assert str(first) == "span{101,011}"
    assert gf2.span(3, []) == Subspace.zero(3)


def test_span_rejects_wrong_width():
    with pytest.raises(WidthMismatch):
        gf2.span(2, [0b100])
    with pytest.raises(WidthMismatch):
        gf2.span(2, [SignVector(3, 1)])


def test_unit_and_contains():
    space = gf2.span(3, [0b011])
    assert gf2.contains(space, SignVector(3, 0b011))
    assert not gf2.contains(space, gf2.unit(3, 0))
    with pytest.raises(BadCoordinate):
        gf2.unit(3, 3)
    with pytest.raises(WidthMismatch):
        gf2.contains(space, SignVector(2, 0))


@given(subspaces())
def test_elements_are_members(space):
    elements = list(space.elements())
    assert len(set(elements)) == space.cardinality
    assert all(vector in space for vector in elements)


@given(subspaces())
def test_annihilator_dimension_and_involution(space):
    ann = gf2.annihilator(space)
    assert ann.dim + space.dim == space.width
    assert all(gf2.dot(row, f) == 0 for row in space.basis for f in ann.basis)
    assert gf2.annihilator(ann) == space


@given(subspace_pairs())
def test_intersection_and_sum(pair):
    left, right = pair
    both = gf2.intersect(left, right)
    total = gf2.subspace_sum(left, right)
    assert both.dim + total.dim == left.dim + right.dim
    expected = set(left.elements()) & set(right.elements())
    assert set(both.elements()) == expected
    assert gf2.is_subspace(both, left) and gf2.is_subspace(left, total)


def test_mixed_widths_are_rejected():
    with pytest.raises(WidthMismatch):
        gf2.intersect(Subspace.zero(2), Subspace.zero(3))


def test_project_and_embed():
    space = gf2.span(4, [0b0101, 0b0011])
    projected = gf2.project(space, [0, 2])
    assert projected == gf2.span(2, [0b11, 0b01])
    placed = gf2.embed(gf2.span(2, [0b11]), [1, 3], 4)
    assert placed == gf2.span(4, [0b1010])
    with pytest.raises(BadCoordinate):
        gf2.project(space, [0, 0])
    with pytest.raises(BadCoordinate):
        gf2.embed(gf2.span(2, [0b11]), [1, 4], 4)


def test_permute_moves_coordinates():
    space = gf2.span(3, [0b001])
    assert gf2.permute(space, (2, 0, 1)) == gf2.span(3, [0b100])
    with pytest.raises(BadCoordinate):
        gf2.permute(space, (0, 0, 1))


@pytest.mark.parametrize("width, count", [(0, 1), (1, 2), (2, 5), (3, 16), (4, 67)])
def test_enumerate_subspaces_counts(width, count):
    spaces = list(gf2.enumerate_subspaces(width))
    assert len(spaces) == count
    assert len(set(spaces)) == count
    assert all(gf2.span(width, s.basis) == s for s in spaces)


def test_json_round_trip():
    space = gf2.span(3, [0b011, 0b110])
    assert gf2.from_json(3, space.to_json()) == space

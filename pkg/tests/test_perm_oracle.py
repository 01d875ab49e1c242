import pytest
from sympy.combinatorics import Permutation

from lattower import gf2
from lattower.autgroup import brute_force_automorphisms
from lattower.data import ChainPosition
from lattower.errors import NotTowerGroup, TooLarge
from lattower.group_spec import parse_spec
from lattower.lattice_core import Profile, sign_parity
from lattower.perm_oracle import (
    LEMMA_GROUPS,
    LEMMA_ORDERS,
    all_normal_subgroups,
    chain_position,
    coatom_incidence,
    concrete_lattice,
    conjugacy_class,
    differential_validate,
    extract_profile,
    generate,
    goursat_check,
    group_of,
    is_normal,
    lemma_lattices,
    make_group,
    membership_agrees,
    normal_closure,
    spec_of,
    symmetric_table,
)


def test_chain_positions():
    assert chain_position(Permutation([0, 1, 2])) == ChainPosition.TRIV
    assert chain_position(Permutation([1, 2, 0])) == ChainPosition.ALT
    assert chain_position(Permutation([1, 0, 3, 2])) == ChainPosition.V
    assert chain_position(Permutation([1, 2, 0, 3])) == ChainPosition.ALT
    assert chain_position(Permutation([1, 0, 2, 3])) == ChainPosition.FULL


@pytest.mark.parametrize(
    "degree, counts",
    [(2, [1, 0, 0, 1]), (3, [1, 0, 2, 3]), (4, [1, 3, 8, 12]), (5, [1, 0, 59, 60])],
)
def test_symmetric_tables(degree, counts):
    table = symmetric_table(degree)
    assert table.perms[0] == tuple(range(degree))
    assert [table.position.count(pos) for pos in ChainPosition] == counts
    assert sum(table.odd) == len(table.perms) // 2
    for a in range(len(table.perms)):
        assert table.mult[a][table.inverse[a]] == 0
        assert table.mult[0][a] == table.mult[a][0] == a


def test_tables_compose_right_to_left():
    table = symmetric_table(3)
    swap, cycle = table.rank[(1, 0, 2)], table.rank[(1, 2, 0)]
    # cycle first, then swap: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
    assert table.perms[table.mult[swap][cycle]] == (0, 2, 1)


def test_group_arithmetic():
    group = make_group((3, 4))
    assert group.order == 144
    assert len(group.generators) == 4
    for x in (5, 77, 143):
        assert group.decode(group.encode(group.decode(x))) == group.decode(x)
        assert group.multiply(x, group.inverse(x)) == group.identity
        assert group.encode(group.decode(x)) == x
    assert group.element(0) == ((0, 1, 2), (0, 1, 2, 3))


def test_generators_span_the_group():
    group = make_group((3, 3))
    assert generate(group, group.generators).order == 36


def test_conjugacy_classes_of_s4():
    group = make_group((4,))
    representatives = {min(conjugacy_class(group, y)) for y in range(24)}
    sizes = sorted(len(conjugacy_class(group, x)) for x in representatives)
    assert sizes == [1, 3, 6, 6, 8]


def test_normal_closure_of_a_transposition_is_everything():
    group = make_group((4,))
    swap = group.encode([group.tables[0].perms.index((1, 0, 2, 3))])
    assert normal_closure(group, swap).order == 24
    double = group.encode([group.tables[0].perms.index((1, 0, 3, 2))])
    assert normal_closure(group, double).order == 4


@pytest.mark.parametrize(
    "degrees, count",
    [((3,), 3), ((4,), 4), ((5,), 3), ((2,), 2), ((2, 2), 5), ((2, 3), 7), ((2, 4), 9), ((3, 3), 10)],
)
def test_normal_subgroup_counts(degrees, count):
    group = make_group(degrees)
    subgroups = all_normal_subgroups(group)
    assert len(subgroups) == count
    assert all(is_normal(group, n) for n in subgroups)
    assert subgroups[0].order == 1 and subgroups[-1].order == group.order


def test_order_bound():
    with pytest.raises(TooLarge):
        make_group((5, 5), max_order=1000)
    with pytest.raises(TooLarge):
        all_normal_subgroups(make_group((4,)), max_order=10)


def test_profiles_describe_members():
    spec = parse_spec("S3^2")
    group = group_of(spec)
    subgroups = all_normal_subgroups(group)
    parity = sign_parity(spec, [0, 1])
    profiles = [extract_profile(group, n) for n in subgroups]
    assert parity.profile in profiles
    for subgroup, profile in zip(subgroups, profiles):
        assert membership_agrees(group, subgroup, profile)


def test_profile_needs_tower_factors():
    group = make_group((2, 3))
    with pytest.raises(NotTowerGroup):
        extract_profile(group, all_normal_subgroups(group)[0])


def test_spec_of():
    assert spec_of(make_group((3, 3, 4))) == parse_spec("S4*S3^2")
    with pytest.raises(NotTowerGroup):
        spec_of(make_group((4, 3)))


@pytest.mark.parametrize(
    "text, count, pairs",
    [("S3^2", 10, 45), ("S3^3", 38, 703), ("S4*S3", 13, 78), ("S4^2", 17, 136)],
)
def test_differential_validation(text, count, pairs):
    report = differential_validate(parse_spec(text))
    assert report["oracle_count"] == report["lattice_count"] == count
    assert report["pairs_checked"] == pairs
    assert report["match"]


@pytest.mark.slow
def test_differential_validation_order_864():
    report = differential_validate(parse_spec("S4*S3^2"))
    assert report["match"]
    assert report["oracle_count"] == 48


@pytest.mark.parametrize("left", [(0,), (1,)])
def test_goursat_on_every_normal_subgroup(left):
    group = make_group((3, 4))
    for subgroup in all_normal_subgroups(group):
        assert goursat_check(group, subgroup, left)


def test_goursat_rejects_a_non_normal_subgroup():
    group = make_group((3, 3))
    swap = group.encode([group.tables[0].perms.index((1, 0, 2)), 0])
    assert not goursat_check(group, generate(group, [swap]), (0,))


def test_lemma_lattices():
    lattices = lemma_lattices()
    assert set(lattices) == set(LEMMA_GROUPS)
    assert lattices["C2^2"].size == 5
    assert len(lattices["C2^2"].hasse_edges) == 6
    assert lattices["C2*S4"].size == 9
    for name, lattice in lattices.items():
        assert len(brute_force_automorphisms(lattice)) == LEMMA_ORDERS[name], name


@pytest.mark.parametrize("m", [3, 4, 5])
def test_atoms_differ_in_coatoms_above(m):
    _, lattice = concrete_lattice(make_group((2, m)), f"C2*S{m}")
    assert len(lattice.coatoms) == 3
    incidence = coatom_incidence(lattice)
    assert len(incidence) == 2
    assert sorted(incidence.values()) == [1, 3]


def test_normal_closures_in_s3():
    group = make_group((3,))
    perms = group.tables[0].perms
    assert normal_closure(group, perms.index((1, 0, 2))).order == 6
    assert normal_closure(group, perms.index((1, 2, 0))).order == 3


def test_profiles_of_named_subgroups():
    spec = parse_spec("S3^3")
    group = group_of(spec)
    by_order: dict[int, list] = {}
    for subgroup in all_normal_subgroups(group):
        by_order.setdefault(subgroup.order, []).append(extract_profile(group, subgroup))
    alt = ChainPosition.ALT
    full = ChainPosition.FULL
    assert Profile((alt, alt, alt), gf2.Subspace.zero(3)) in by_order[27]
    assert Profile((full, full, full), gf2.span(3, [0b111])) in by_order[54]


def test_permutation_embedding():
    group = make_group((2, 3))
    assert group.offsets == (0, 2, 5)
    assert group.permutation_group.order() == 12
    for x in range(group.order):
        perm = group.to_permutation(x)
        assert perm.size == 5
        assert group.from_permutation(perm) == x
    left, right = 7, 4
    product = group.to_permutation(right) * group.to_permutation(left)
    assert group.from_permutation(product) == group.multiply(left, right)


def test_conjugacy_classes_match_the_tables():
    group = make_group((3, 4))
    for x in (0, 9, 50, 131):
        by_table = sorted({group.conjugate(x, h) for h in range(group.order)})
        assert conjugacy_class(group, x) == by_table


def test_is_normal_rejects_a_point_stabiliser():
    group = make_group((3,))
    swap = group.tables[0].rank[(1, 0, 2)]
    assert not is_normal(group, generate(group, [swap]))
    assert is_normal(group, generate(group, [group.tables[0].rank[(1, 2, 0)]]))

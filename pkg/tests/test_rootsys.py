import pytest

from bkcalc import (
    GroupType,
    IndexOutOfRange,
    UnsupportedType,
    build_root_system,
)

ALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"]

EXPECTED_N_POS = {
    "A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9,
    "D4": 12, "G2": 6, "F4": 24, "E6": 36,
}


def rs_of(label):
    return build_root_system(GroupType.parse(label))


@pytest.mark.parametrize("label,bad", [
    ("E7", True), ("E8", True), ("E5", True), ("A0", True),
    ("B1", True), ("D2", True), ("F3", True), ("G3", True), ("H3", True),
])
def test_rejected_types(label, bad):
    with pytest.raises(UnsupportedType):
        GroupType.parse(label)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_positive_root_count(label):
    assert rs_of(label).n_pos == EXPECTED_N_POS[label]


@pytest.mark.parametrize("label", ALL_TYPES)
def test_simple_roots_first(label):
    rs = rs_of(label)
    for i in range(rs.rank):
        assert rs.positive_roots[i] == tuple(
            int(i == j) for j in range(rs.rank)
        )
        assert rs.positive_coroots[i] == rs.positive_roots[i]


@pytest.mark.parametrize("label", ALL_TYPES)
def test_fw_coordinates_agree_with_cartan(label):
    rs = rs_of(label)
    for sr, fw in zip(rs.positive_roots, rs.positive_roots_fw):
        expected = tuple(
            sum(rs.cartan[k][j] * sr[j] for j in range(rs.rank))
            for k in range(rs.rank)
        )
        assert fw == expected


@pytest.mark.parametrize("label", ALL_TYPES)
def test_root_addition_closure(label):
    rs = rs_of(label)
    roots = set(rs.positive_roots)
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            s = tuple(x + y for x, y in zip(a, b))
            # the sum table must list the sum whenever it is a root
            if s in roots:
                i = rs.positive_roots.index(a)
                j = rs.positive_roots.index(b)
                if i != j:
                    assert rs.root_sum_index[(i, j)] == rs.positive_roots.index(s)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_rho_pairs_to_one_with_simple_coroots(label):
    rs = rs_of(label)
    for i in range(rs.rank):
        assert rs.pairing(rs.rho, i) == 1


def test_a1_roots():
    rs = rs_of("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.positive_roots_fw == ((2,),)


def test_a2_simple_root_in_fw_coords():
    rs = rs_of("A2")
    assert rs.positive_roots_fw[0] == (2, -1)
    assert rs.positive_roots_fw[1] == (-1, 2)


def test_pairing_examples():
    rs = rs_of("A2")
    assert rs.pairing((1, 1), 0) == 1
    # highest root: its coroot is the sum of the two simple coroots
    assert rs.pairing((1, 0), 2) == 1
    assert rs.pairing((0, 0), 2) == 0


def test_pairing_index_out_of_range():
    rs = rs_of("A2")
    with pytest.raises(IndexOutOfRange):
        rs.pairing((1, 0), 3)


def test_parse_round_trip():
    t = GroupType.parse("B3")
    assert (t.series, t.rank) == ("B", 3)
    assert str(t) == "B3"


@pytest.mark.parametrize("label", ALL_TYPES)
def test_gram_is_symmetric_positive_on_rho(label):
    rs = rs_of(label)
    g = rs.gram_fw
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert g[i][j] == g[j][i]
    assert rs.inner(rs.rho, rs.rho) > 0

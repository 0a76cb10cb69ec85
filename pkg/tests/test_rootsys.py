import pytest

from halfabelian.rootsys import (
    SimpleType,
    ValidationError,
    build_root_system,
    cartan_matrix,
    expected_root_count,
)


@pytest.mark.parametrize(
    "name,count",
    [("A1", 2), ("A2", 6), ("G2", 12), ("B4", 32), ("C4", 32), ("D6", 60),
     ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240)],
)
def test_root_counts(name, count):
    st = SimpleType.parse(name)
    assert expected_root_count(st) == count
    assert len(build_root_system(st)) == count


@pytest.mark.parametrize("fam,rank", [("B", 0), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("X", 2)])
def test_invalid_types(fam, rank):
    with pytest.raises(ValidationError):
        SimpleType(fam, rank)


def test_parse_forms():
    assert SimpleType.parse("E6") == SimpleType("E", 6)
    assert SimpleType.parse("d 6") == SimpleType("D", 6)
    assert SimpleType.parse("G") == SimpleType("G", 2)
    assert SimpleType.parse("C", 12) == SimpleType("C", 12)
    with pytest.raises(ValidationError):
        SimpleType.parse("C")
    with pytest.raises(ValidationError):
        SimpleType.parse("E6", 7)


def test_is_root_small_cases():
    a2 = build_root_system(SimpleType("A", 2))
    assert a2.is_root([1, 1])
    assert not a2.is_root([2, 1])
    with pytest.raises(ValidationError):
        a2.is_root([1, 1, 0])


def test_d6_root_sums():
    d6 = build_root_system(SimpleType("D", 6))
    for r in ([0, 1, 1, 1, 1, 0], [0, 0, 1, 1, 0, 1], [0, 0, 1, 1, 1, 0], [0, 0, 0, 1, 1, 1]):
        assert d6.is_root(r)
    assert d6.is_root([0, 1, 2, 2, 1, 1])


@pytest.mark.parametrize("name", ["B3", "C3", "F4", "G2"])
def test_cartan_long_short_direction(name):
    st = SimpleType.parse(name)
    cm = cartan_matrix(st)
    rs = build_root_system(st)
    for i in range(st.rank):
        assert cm[i][i] == 2
        for j in range(st.rank):
            if i != j and cm[i][j]:
                # a_ij = -1 when alpha_j is at least as long as alpha_i
                assert (cm[i][j] == -1) == (rs.gram[j][j] >= rs.gram[i][i])


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D5", "F4", "G2", "E6"])
def test_closed_under_negation_and_highest_root_unique(name):
    rs = build_root_system(SimpleType.parse(name))
    roots = set(rs.roots)
    assert all(tuple(-c for c in r) in roots for r in roots)
    pos = [rs.roots[i] for i in rs.positive]
    assert len(pos) * 2 == len(rs)
    top = max(pos, key=sum)
    assert sum(1 for r in pos if sum(r) == sum(top)) == 1


def test_highest_roots():
    def top(name):
        rs = build_root_system(SimpleType.parse(name))
        return max((rs.roots[i] for i in rs.positive), key=sum)

    assert top("G2") == (3, 2)
    assert top("F4") == (2, 3, 4, 2)
    assert top("E8") == (2, 3, 4, 6, 5, 4, 3, 2)
    assert top("B3") == (1, 2, 2)
    assert top("C3") == (2, 2, 1)


def test_sum_index():
    a2 = build_root_system(SimpleType("A", 2))
    i, j = a2.index((1, 0)), a2.index((0, 1))
    assert a2.roots[a2.sum_index(i, j)] == (1, 1)
    assert a2.sum_index(i, i) is None

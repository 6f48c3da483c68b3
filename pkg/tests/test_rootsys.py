import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homrat.catalog import simple_types
from homrat.rootsys import (
    ParseError,
    SemisimpleType,
    SimpleType,
    cartan_matrix,
    generate_roots,
    group_invariants,
    identify_cartan,
    parse_type,
    positive_root_count,
)

SIMPLE8 = simple_types(8)


def weyl_orbit_roots(cartan):
    """All roots as the Weyl orbit of the simple roots (independent of root strings)."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen, todo = set(simple), list(simple)
    while todo:
        beta = todo.pop()
        for i in range(n):
            pair = sum(beta[j] * cartan[j][i] for j in range(n))
            img = tuple(b - pair * (k == i) for k, b in enumerate(beta))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    return seen


# Bourbaki plates: marks of the highest root, Coxeter and dual Coxeter numbers.
MARKS = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2),
    "G2": (3, 2),
}


def classical_marks(t):
    n = t.rank
    if t.family == "A":
        return (1,) * n
    if t.family == "B":
        return (1,) + (2,) * (n - 1)
    if t.family == "C":
        return (2,) * (n - 1) + (1,)
    return (1,) + (2,) * (n - 3) + (1, 1)


def coxeter(t):
    n = t.rank
    return {"A": n + 1, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}.get(n), "F": 12, "G": 6}[t.family]


def dual_coxeter(t):
    n = t.rank
    return {"A": n + 1, "B": 2 * n - 1, "C": n + 1, "D": 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}.get(n), "F": 9, "G": 4}[t.family]


@pytest.mark.parametrize("t", SIMPLE8, ids=str)
def test_roots_match_weyl_orbit(t):
    rs = generate_roots(t)
    orbit = weyl_orbit_roots(rs.cartan)
    pos = {r for r in orbit if all(c >= 0 for c in r)}
    assert pos == set(rs.positive_roots)
    assert len(orbit) == 2 * len(pos)
    assert len(pos) == positive_root_count(t)


@pytest.mark.parametrize("t", SIMPLE8, ids=str)
def test_marks_and_coxeter_numbers(t):
    rs = generate_roots(t)
    assert rs.marks == MARKS.get(str(t), None) or rs.marks == classical_marks(t)
    assert rs.coxeter_number == coxeter(t)
    assert sum(rs.comarks) + 1 == dual_coxeter(t)
    assert rs.norm(rs.highest_root) == 2


@pytest.mark.parametrize("t", SIMPLE8, ids=str)
def test_cartan_is_symmetrizable_with_long_roots_2(t):
    rs = generate_roots(t)
    a, d = rs.cartan, rs.root_lengths
    n = len(a)
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            assert a[i][j] * d[j] == a[j][i] * d[i]
    assert max(d) == 2


def test_bourbaki_conventions():
    assert cartan_matrix(SimpleType("G", 2)) == ((2, -1), (-3, 2))
    b3 = generate_roots(SimpleType("B", 3))
    c3 = generate_roots(SimpleType("C", 3))
    assert b3.root_lengths[-1] == 1 and c3.root_lengths[-1] == 2
    assert generate_roots(SimpleType("G", 2)).comarks == (1, 2)
    assert generate_roots(SimpleType("F", 4)).comarks == (2, 3, 2, 1)


@pytest.mark.parametrize(
    "text,dim",
    [("B3", 21), ("G2", 14), ("A3", 15), ("A2+2A1", 14), ("E8", 248), ("D4", 28), ("1", 0)],
)
def test_dimensions(text, dim):
    assert group_invariants(parse_type(text)).dim == dim


def test_torus_counts_in_dim_only():
    gi = group_invariants(parse_type("A2"), central_torus=2)
    assert (gi.rank, gi.dim) == (2, 10)
    with pytest.raises(ValueError):
        group_invariants(parse_type("A2"), -1)


@pytest.mark.parametrize(
    "alias,canon",
    [("B1", "A1"), ("C1", "A1"), ("B2", "C2"), ("D2", "2A1"), ("D3", "A3"), ("A1+A1", "2A1"), ("A1 + C3", "C3+A1")],
)
def test_aliases(alias, canon):
    assert str(parse_type(alias)) == canon


@pytest.mark.parametrize(
    "text,token,position",
    [("A2+X3", "X3", 3), ("E9", "E9", 0), ("A0", "A0", 0), ("A2++A1", "", 3), ("", "", 0), ("G3", "G3", 0), ("a2", "a2", 0)],
)
def test_parse_errors_locate_token(text, token, position):
    with pytest.raises(ParseError) as e:
        parse_type(text)
    assert e.value.token == token
    assert e.value.position == position


def test_parse_position_counts_whitespace():
    with pytest.raises(ParseError) as e:
        parse_type("A2 + F5")
    assert e.value.position == 5


def test_simple_type_rejects_aliases():
    with pytest.raises(ValueError):
        SimpleType("B", 2)
    with pytest.raises(ValueError):
        SimpleType("D", 3)


semisimple = st.lists(st.sampled_from(simple_types(5)), min_size=0, max_size=3).map(
    lambda cs: SemisimpleType(tuple(cs))
)


@given(semisimple)
def test_display_round_trip(s):
    assert parse_type(str(s)) == s


@given(semisimple)
def test_rank_and_dim_add_over_components(s):
    gi = group_invariants(s)
    assert gi.rank == sum(c.rank for c in s)
    assert gi.dim == sum(group_invariants(SemisimpleType((c,))).dim for c in s)


def block_cartan(s):
    blocks = [cartan_matrix(c) for c in s]
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                m[off + i][off + j] = v
        off += len(b)
    return m


@settings(max_examples=60)
@given(semisimple.filter(lambda s: s.rank > 0), st.randoms(use_true_random=False))
def test_identify_cartan_is_permutation_invariant(s, rnd):
    m = block_cartan(s)
    perm = list(range(len(m)))
    rnd.shuffle(perm)
    shuffled = [[m[perm[i]][perm[j]] for j in range(len(m))] for i in range(len(m))]
    assert identify_cartan(shuffled) == s


def test_identify_cartan_rejects_non_finite():
    affine_a1 = [[2, -2], [-2, 2]]
    with pytest.raises(ValueError):
        identify_cartan(affine_a1)

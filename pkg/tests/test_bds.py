from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homrat.bds import (
    LEVI,
    SEMISIMPLE,
    MaxRankSubgroup,
    enumerate_maximal_rank,
    extended_diagram,
    levi_moves,
    move_at,
    semisimple_moves,
)
from homrat.catalog import semisimple_types, simple_types
from homrat.rootsys import SemisimpleType, SimpleType, generate_roots, identify_cartan, parse_type


def closed_subsystem_keys(t: SimpleType):
    """(type, central torus) of every closed symmetric root subsystem, by brute force."""
    rs = generate_roots(t)
    n = rs.rank
    pos = list(rs.positive_roots)
    roots = set(pos) | {tuple(-c for c in r) for r in pos}
    d = rs.root_lengths
    form = [[Fraction(rs.cartan[i][j]) * d[j] / 2 for j in range(n)] for i in range(n)]

    def ip(a, b):
        return sum(a[i] * form[i][j] * b[j] for i in range(n) for j in range(n))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    keys = set()
    for bits in product((0, 1), repeat=len(pos)):
        sub = [r for r, b in zip(pos, bits) if b]
        psi = set(sub) | {tuple(-c for c in r) for r in sub}
        if any(add(a, b) in roots and add(a, b) not in psi for a in psi for b in psi):
            continue
        sums = {add(a, b) for a in sub for b in sub}
        simple = [r for r in sub if r not in sums]
        cart = [[int(2 * ip(a, b) / ip(b, b)) for b in simple] for a in simple]
        keys.add((identify_cartan(cart) if simple else SemisimpleType(), n - len(simple)))
    return keys


@pytest.mark.parametrize("name", ["G2", "A3", "B3", "C3", "D4"])
def test_enumeration_matches_closed_subsystems(name):
    t = parse_type(name)
    (simple,) = t.components
    got = {h.key for h in enumerate_maximal_rank(t, depth=2 * t.rank)} | {(t, 0)}
    assert got == closed_subsystem_keys(simple)


def test_small_enumerations():
    assert [str(h) for h in enumerate_maximal_rank(parse_type("C2"), 1)] == ["A1+T1", "2A1"]
    assert [str(h) for h in enumerate_maximal_rank(parse_type("G2"), 1)] == ["A2", "A1+T1", "2A1"]
    assert [str(h) for h in enumerate_maximal_rank(parse_type("A1"))] == ["1+T1"]
    with pytest.raises(ValueError):
        enumerate_maximal_rank(parse_type("A2"), 0)


def test_known_moves():
    b3 = SimpleType("B", 3)
    assert {(m.node, str(m.result), m.comark_at_node) for m in semisimple_moves(b3)} == {
        (2, "3A1", 2),
        (3, "A3", 1),
    }
    assert [str(m.result) for m in levi_moves(b3)] == ["C2", "2A1", "A2"]
    g2 = SimpleType("G", 2)
    assert {str(m.result) for m in semisimple_moves(g2)} == {"A2", "2A1"}
    assert extended_diagram(g2).marks_ext == (1, 3, 2)
    # affine node of G2 is joined to the long simple root only
    assert [(i, j) for i, j, _ in extended_diagram(g2).edges if 0 in (i, j)] == [(0, 2)]
    assert (0, 1, 4) in extended_diagram(SimpleType("A", 1)).edges


def test_move_at_errors():
    with pytest.raises(ValueError, match="not prime"):
        move_at(SimpleType("E", 8), SEMISIMPLE, 4)  # mark 6
    with pytest.raises(ValueError, match="no node"):
        move_at(SimpleType("A", 2), LEVI, 3)


@pytest.mark.parametrize("t", simple_types(8), ids=str)
def test_affine_marks_are_null_vectors(t):
    ext = extended_diagram(t)
    a = ext.cartan
    r = range(len(a))
    assert all(sum(ext.marks_ext[i] * a[i][j] for i in r) == 0 for j in r)
    assert all(sum(a[i][j] * ext.comarks_ext[j] for j in r) == 0 for i in r)


@pytest.mark.parametrize("t", simple_types(8), ids=str)
def test_moves_keep_rank_and_lower_dimension(t):
    whole = MaxRankSubgroup.whole(SemisimpleType((t,)))
    for m in semisimple_moves(t) + levi_moves(t):
        h = whole.apply((0,), m)
        assert h.semisimple_part.rank + h.central_torus == t.rank
        assert h.dim < whole.dim
        assert m.torus_delta == (1 if m.kind == LEVI else 0)
        if m.kind == SEMISIMPLE:
            assert m.comark_at_node in extended_diagram(t).comarks_ext


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(semisimple_types(4)), st.integers(1, 2))
def test_enumeration_invariants(g, depth):
    hs = enumerate_maximal_rank(g, depth)
    keys = [h.key for h in hs]
    assert len(keys) == len(set(keys))
    assert g not in {k for k, torus in keys if torus == 0}
    assert hs == sorted(hs, key=MaxRankSubgroup.sort_key)
    for h in hs:
        assert h.semisimple_part.rank + h.central_torus == g.rank
        assert 1 <= len(h.chain) <= depth
        assert h.dim < MaxRankSubgroup.whole(g).dim


def test_chain_paths_replay():
    g = parse_type("C3+A1")
    for h in enumerate_maximal_rank(g, 2):
        replay = MaxRankSubgroup.whole(g)
        for m in h.chain:
            replay = replay.apply(m.path, move_at(m.target, m.kind, m.node))
        assert replay.key == h.key


def test_simply_connected_flag():
    b3 = parse_type("B3")
    by = {str(h): h for h in enumerate_maximal_rank(b3, 1)}
    assert by["A3"].simply_connected_cover_splits
    assert not by["3A1"].simply_connected_cover_splits


def test_to_json_shape():
    h = enumerate_maximal_rank(parse_type("G2"), 1)[0]
    d = h.to_json()
    assert d["semisimple_part"] == "A2" and d["torus"] == 0
    assert d["chain"] == [{"kind": SEMISIMPLE, "node": 1, "comark": 1, "component": "G2", "path": [0]}]

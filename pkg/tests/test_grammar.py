import pytest

from homrat.bds import LEVI, SEMISIMPLE
from homrat.certify import NO, UNKNOWN, YES, BorelContained, General, MaxRank
from homrat.grammar import parse_subgroup, resolve_maxrank
from homrat.rootsys import ParseError, parse_type


def parse(text, group="G2"):
    return parse_subgroup(text, parse_type(group))


def test_borel():
    assert parse("borel:dim=3") == BorelContained(3)


def test_maxrank_by_type():
    h = parse("maxrank:A2").subgroup
    assert str(h) == "A2" and [m.kind for m in h.chain] == [SEMISIMPLE]


def test_maxrank_whole_and_torus():
    assert parse("maxrank:G2").subgroup.is_whole
    assert str(parse("maxrank:A1+T1").subgroup) == "A1+T1"
    assert str(parse("maxrank:T2").subgroup) == "1+T2"


def test_maxrank_chain_and_leaf():
    h = parse("maxrank:2A1+T1;chain=ss:1,levi:1", "C3").subgroup
    assert [m.kind for m in h.chain] == [SEMISIMPLE, LEVI]
    assert h.chain[1].path == (0, 0)
    h = parse("maxrank:C2+T1;chain=ss:1,levi:1@1", "C3").subgroup
    assert h.chain[1].path == (0, 1) and str(h.chain[1].target) == "A1"


def test_torus_must_fit_the_rank():
    # the torus is fixed by the rank, so a wrong +T<k> names no subgroup
    with pytest.raises(ParseError, match="no maximal-rank"):
        parse("maxrank:2A1+T2", "C3")
    assert parse("maxrank:2A1+T1", "C3").subgroup.central_torus == 1


def test_resolve_absent_type():
    with pytest.raises(ParseError, match="no maximal-rank"):
        resolve_maxrank(parse_type("G2"), parse_type("A3"))


def test_general_defaults_and_flags():
    h = parse("general:levi=A1,torus=1,unip=2,parabolic=yes,kernel0=unknown")
    assert h == General(parse_type("A1"), 1, 2, True, YES, UNKNOWN, UNKNOWN)
    assert parse("general:levi=2A1,connected=no").connected is False
    assert parse("general:levi=A1,subregular=yes,parabolic=no").subregular == YES
    assert parse("general:levi=1,parabolic=no").in_proper_parabolic == NO


@pytest.mark.parametrize(
    "text,token,position",
    [
        ("bogus:dim=3", "bogus", 0),
        ("weird", "weird", 0),
        ("borel:dim=x", "x", 10),
        ("borel:size=3", "size=3", 6),
        ("maxrank:A2;chain=ss:9", "ss:9", 17),
        ("maxrank:A2;chain=ss:1,zz:2", "zz:2", 22),
        ("maxrank:A2;order=ss:1", "order=ss:1", 11),
        ("maxrank:A1+X2", "X2", 11),
        ("general:levi=A1,colour=red", "colour=red", 16),
        ("general:levi=A1,torus=-1", "-1", 22),
        ("general:levi=A1,parabolic=maybe", "maybe", 26),
        ("general:levi=A1,subregular=unknown", "unknown", 27),
        ("general:levi=A1,levi=A2", "levi=A2", 16),
        ("general:torus=1", "torus=1", 8),
    ],
)
def test_errors_locate_token(text, token, position):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert (e.value.token, e.value.position) == (token, position)
    assert text[position:].startswith(token)


def test_chain_must_match_stated_type():
    with pytest.raises(ParseError, match="chain produces"):
        parse("maxrank:A2;chain=ss:2")


def test_non_prime_mark_is_rejected():
    with pytest.raises(ParseError, match="not prime"):
        parse("maxrank:A7+A1;chain=ss:4", "E8")

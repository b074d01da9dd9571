import pytest
from hypothesis import given, settings

from scatcalc.ordinal import parse_ordinal
from scatcalc.rewrite import normalize
from scatcalc.term import (
    EMPTY,
    Glue,
    ID_BAIRE,
    ID_Q,
    MaxFn,
    MinFn,
    ONE,
    Omega,
    PglSet,
    TermSyntaxError,
    Wedge,
    format_term,
    merged_wedge,
    parse_term,
    sort_key,
    syntactic_cmp,
    term_size,
)

from conftest import terms


def test_parse_examples():
    assert parse_term("min(w+1)") == MinFn(parse_ordinal("w+1"))
    assert parse_term("glue(one, omega(one))") == Glue([ONE, Omega(ONE)])
    w = parse_term("wedge({max(w)} | {min(w+1)})")
    assert w == Wedge([[MaxFn(parse_ordinal("w"))]], [MinFn(parse_ordinal("w+1"))])


def test_parse_sugar_and_atoms():
    assert parse_term("3*one") == Glue([ONE, ONE, ONE])
    assert parse_term("0*empty") == Glue([])
    assert parse_term("idq") == ID_Q
    assert parse_term("idbaire") == ID_BAIRE
    assert parse_term(" pgl { one ,\tomega( one ) } ") == PglSet([ONE, Omega(ONE)])


def test_parse_rejections():
    with pytest.raises(TermSyntaxError):
        parse_term("min(w)")  # limit rank
    with pytest.raises(TermSyntaxError):
        parse_term("min(0)")
    with pytest.raises(TermSyntaxError):
        parse_term("pgl{}")
    with pytest.raises(TermSyntaxError):
        parse_term("wedge({one}, {one} | {})")  # duplicate vertical sets
    with pytest.raises(TermSyntaxError):
        parse_term("glue(one")
    with pytest.raises(TermSyntaxError):
        parse_term("one extra")
    with pytest.raises(TermSyntaxError) as exc:
        parse_term("glue(one, nope)")
    assert exc.value.position == 10


def test_sentinels_cannot_nest():
    with pytest.raises(ValueError):
        Glue([ID_Q])
    with pytest.raises(ValueError):
        Omega(ID_BAIRE)
    with pytest.raises(TermSyntaxError):
        parse_term("pgl{idq}")


def test_format_examples():
    assert format_term(ONE) == "one"
    assert format_term(Glue([ONE, ONE])) == "2*one"
    assert format_term(Glue([ONE, Omega(ONE)])) == "glue(one, omega(one))"
    assert format_term(Wedge([[MaxFn(parse_ordinal("w"))]], [])) == "wedge({max(w)} | {})"


def test_syntactic_cmp_examples():
    assert syntactic_cmp(EMPTY, ONE) < 0
    assert syntactic_cmp(ONE, ONE) == 0
    assert syntactic_cmp(ONE, EMPTY) > 0


def test_term_size():
    assert term_size(Glue([ONE, ONE])) == 3
    assert term_size(EMPTY) == 1
    assert term_size(parse_term("wedge({max(w)} | {min(w+1)})")) == 3


def test_multiset_semantics():
    assert Glue([ONE, Omega(ONE)]) == Glue([Omega(ONE), ONE])
    assert PglSet([ONE, ONE]) == PglSet([ONE])
    assert Wedge([[ONE], [Omega(ONE)]], []) == Wedge([[Omega(ONE)], [ONE]], [])


def test_merged_wedge_collapses_duplicates():
    w = merged_wedge([[ONE], [ONE]], [])
    assert w.verticals == ((ONE,),)
    with pytest.raises(ValueError):
        Wedge([[ONE], [ONE]], [])


@given(terms())
@settings(max_examples=300, deadline=None)
def test_raw_roundtrip(t):
    assert parse_term(format_term(t)) == t


@given(terms())
@settings(max_examples=200, deadline=None)
def test_normalized_roundtrip(t):
    n = normalize(t)
    assert parse_term(format_term(n)) == n


@given(terms(), terms())
@settings(max_examples=200, deadline=None)
def test_syntactic_cmp_total_and_antisymmetric(a, b):
    assert syntactic_cmp(a, b) == -syntactic_cmp(b, a)
    if syntactic_cmp(a, b) == 0:
        assert a == b
    # stability: the key function is deterministic
    assert sort_key(a) == sort_key(a)

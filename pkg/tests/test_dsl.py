import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irrbase.dsl import Binary, ElaborationError, Leaf, ParseError, build, parse, to_text, tokenize

pos = st.integers(1, 400)

leaves = st.one_of(
    st.builds(lambda n, q: Leaf("GL", (n, q)), pos, pos),
    st.builds(lambda n, q, d: Leaf("GammaL", (n, (q, d))), pos, pos, st.none() | pos),
    st.builds(lambda r, m, q, v: Leaf("E", (r, m, q, v)), pos, pos, pos, st.sampled_from("+-s")),
    st.builds(lambda k: Leaf("Sym", (k,)), pos),
    st.builds(lambda k: Leaf("Cyc", (k,)), pos),
    st.just(Leaf("counterexample")),
)

exprs = st.recursive(
    leaves,
    lambda sub: st.builds(Binary, st.sampled_from(["wreath", "tensor", "direct"]), sub, sub),
    max_leaves=8,
)


@settings(max_examples=300)
@given(exprs)
def test_round_trip(e):
    text = to_text(e)
    assert parse(text) == e
    assert to_text(parse(text)) == text


@given(exprs, st.sampled_from([" ", "  ", "\t", "\n "]))
def test_whitespace_is_insignificant(e, ws):
    spaced = ws + ws.join(t.text for t in tokenize(to_text(e))) + ws
    assert parse(spaced) == e


def test_operators_are_left_associative():
    e = parse("GL(1,3) wr Cyc(2) wr Sym(2)")
    assert e.op == "wreath" and isinstance(e.left, Binary) and e.right == Leaf("Sym", (2,))
    nested = parse("GL(1,3) wr (Cyc(2) wr Sym(2))")
    assert isinstance(nested.right, Binary)


def test_x_alias_only_between_extraspecial_leaves():
    assert parse("E(2,1,7,+) x E(3,1,7,+)") == parse("E(2,1,7,+) (x) E(3,1,7,+)")
    with pytest.raises(ParseError) as info:
        parse("Sym(3) x Sym(2)")
    assert info.value.offset == 7


@pytest.mark.parametrize("text,offset,expected", [
    ("GL(1,3) wr", 10, "group leaf"),
    ("GL(1,3) wr Foo(2)", 11, "group leaf"),
    ("GL(1 3)", 5, "','"),
    ("E(2,1,5,*)", 8, None),
    ("GL(0,3)", 3, "must be positive"),
    ("Sym(3) Cyc(2)", 7, "operator"),
    ("(GL(1,3) wr Cyc(2)", 18, "')'"),
    ("", 0, "group leaf"),
])
def test_error_offsets(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    if expected:
        assert expected in str(info.value)


def test_offsets_are_bytes():
    # a no-break space is two bytes in UTF-8 but one character
    text = "Sym(2) + Foo"
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == len("Sym(2) + ".encode())
    with pytest.raises(ParseError) as info:
        tokenize("Sym(2) + é")
    assert info.value.offset == 9


@pytest.mark.parametrize("text,fragment", [
    ("E(3,1,5,+)", "r | q-1"),
    ("E(3,1,7,-)", "r = 2"),
    ("GL(1,2) wr Cyc(2)", "reducible"),
    ("GL(1,6)", "not a prime power"),
    ("GL(2,3)", "only GL(1,q)"),
    ("GammaL(2,4)", "only GammaL(1"),
    ("GL(1,3) wr GL(1,5)", "permutation group"),
    ("E(3,1,7,+) (x) E(2,2,13,s)", "field"),
    ("Sym(3) (x) Cyc(2)", "matrix groups"),
])
def test_elaboration_errors(text, fragment):
    with pytest.raises(ElaborationError) as info:
        build(text)
    assert fragment in str(info.value)


def test_elaboration_builds_expected_groups():
    assert build("GL(1,3) wr Cyc(2)").order == 8
    assert build("GammaL(1,2^4)").order == 60
    assert build("GammaL(1,16)").order == 60
    assert build("E(2,1,7,+) x E(3,1,7,+)").degree == 7 ** 6
    assert build("Sym(3) + Cyc(2)").degree == 5
    assert build("Sym(4) wr Sym(2)").order == 24 ** 2 * 2

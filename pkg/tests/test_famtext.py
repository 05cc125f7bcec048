import pytest
from hypothesis import given

from conftest import fam, families
from hmshift.famtext import ParseError, parse_cross, parse_family, write_cross, write_family
from hmshift.extremal import construct_cross_extremal


def test_parse_basic():
    assert parse_family("n=3 k=2\n1 2\n1 3\n") == fam(3, 2, [1, 2], [1, 3])


def test_comments_and_blank_lines():
    text = "# a star\n\nn=3 k=2\n# sets\n1 3\n\n2 1\n"
    assert parse_family(text) == fam(3, 2, [1, 2], [1, 3])


def test_roundtrip_canonical():
    text = "n=4 k=2\n3 4\n2 1\n"
    assert write_family(parse_family(text)) == "n=4 k=2\n1 2\n3 4\n"


@given(families())
def test_write_parse_identity(f):
    assert parse_family(write_family(f)) == f
    assert write_family(parse_family(write_family(f))) == write_family(f)


@pytest.mark.parametrize(
    "text, line, col, fragment",
    [
        ("n=3 k=2\n1 2 3\n", 2, 1, "wrong cardinality"),
        ("n=3 k=2\n1 4\n", 2, 3, "out of range"),
        ("n=3 k=2\n1 2\n2 1\n", 3, 1, "duplicate set"),
        ("n=3, k=2\n1 2\n", 1, 1, "malformed header"),
        ("1 2\n", 1, 1, "malformed header"),
        ("n=3 k=2\n1 x\n", 2, 3, "not an integer"),
        ("n=3 k=2\n1 1\n", 2, 3, "repeated"),
        ("n=3 k=5\n", 1, 5, "uniformity"),
        ("", 1, 1, "missing header"),
    ],
)
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_family(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert fragment in str(info.value)


def test_cross_roundtrip():
    inst = construct_cross_extremal(5, 3)
    again = parse_cross(write_cross(inst))
    assert again == inst


def test_cross_errors():
    with pytest.raises(ParseError, match="before an"):
        parse_cross("n=3 k=2\n1 2\n")
    with pytest.raises(ParseError, match="wrong cardinality"):
        parse_cross("n=3 k=2\n[A]\n1 2\n")
    with pytest.raises(ParseError, match="repeated"):
        parse_cross("n=3 k=2\n[A]\n1\n[A]\n2\n")


def test_empty_set_token():
    inst = parse_cross("n=1 k=1\n[A]\n-\n[B]\n1\n")
    assert inst.a.masks == (0,)
    assert "-" in write_cross(inst)

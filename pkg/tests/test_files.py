import pytest

from dpdi.covers import bc_config_even, k_config
from dpdi.digraph import build_digraph
from dpdi.files import (
    FormatError,
    format_cover,
    format_digraph,
    format_transversal,
    parse_cover,
    parse_digraph,
    parse_transversal,
)

DIGON = build_digraph(2, [(0, 1), (1, 0)])


def test_parse_digraph_skips_comments_and_blanks():
    text = "# a triangle, one chord removed\n\n3 2\n0 1\n1 2  # trailing note\n"
    digraph = parse_digraph(text, source="g.dg")
    assert digraph.n == 3
    assert digraph.sorted_arcs == ((0, 1), (1, 2))


def test_digraph_round_trip():
    digraph = build_digraph(3, [(2, 0), (0, 1)])
    text = format_digraph(digraph)
    assert text == "3 2\n0 1\n2 0\n"
    assert parse_digraph(text, source="-") == digraph


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("", None, "empty digraph file"),
        ("2\n", 1, "expected 'n m', got '2'"),
        ("-1 0\n", 1, "vertex and arc counts must be nonnegative"),
        ("2 1\n0 1\n0 1\n", 1, "header promises 1 arcs, file has 2"),
        ("2 1\n", 1, "header promises 1 arcs, file has 0"),
        ("2 2\n0 1\n0 1\n", 3, "duplicate arc (0, 1)"),
        ("2 1\nx y\n", 2, "expected two integers, got 'x y'"),
        ("2 1\n0 1 2\n", 2, "expected 'u v', got '0 1 2'"),
        ("1 1\n0 0\n", 2, "loop at vertex 0"),
        ("2 1\n0 5\n", 2, "arc (0, 5) out of range for 2 vertices"),
    ],
)
def test_parse_digraph_errors(text, line, message):
    with pytest.raises(FormatError) as info:
        parse_digraph(text, source="f.dg")
    assert info.value.line == line
    assert message in str(info.value)
    assert str(info.value).startswith("f.dg:")


def test_cover_round_trip():
    for config in (k_config(3), bc_config_even(4)):
        text = format_cover(config.cover)
        assert parse_cover(text, config.digraph, source="-") == config.cover


@pytest.mark.parametrize(
    "text,message",
    [
        ("{", "invalid JSON"),
        ("[]", "cover file must hold a JSON object"),
        ('{"sizes": [1], "matchings": []}', "got 1 sizes for 2 vertices"),
        ('{"sizes": [1, 1], "matchings": [], "extra": 1}', "unknown keys ['extra']"),
        (
            '{"sizes": [1, 1], "matchings": [{"arc": [0, 2], "pairs": []}]}',
            "(0, 2) is not an arc of the digraph",
        ),
        (
            '{"sizes": [1, 1], "matchings": '
            '[{"arc": [0, 1], "pairs": [[0, 0]]}, {"arc": [0, 1], "pairs": []}]}',
            "arc (0, 1) listed twice",
        ),
        (
            '{"sizes": [1, 1], "matchings": [{"arc": [0, 1], "pairs": [[0, 0], [0, 0]]}]}',
            "duplicate pair on arc (0, 1)",
        ),
        (
            '{"sizes": [1, 1], "matchings": [{"arc": [0, 1], "pairs": [[0, 5]]}]}',
            "cover is not valid for the digraph",
        ),
        (
            '{"sizes": [1, 1], "matchings": [{"arc": [0, 1], "pairs": [[0, 0]], "x": 1}]}',
            "matchings[0] must have 'arc' and 'pairs'",
        ),
    ],
)
def test_parse_cover_errors(text, message):
    with pytest.raises(FormatError) as info:
        parse_cover(text, DIGON, source="c.json")
    assert message in str(info.value)


def test_parse_transversal():
    assert parse_transversal("0 1\n# note\n1 0\n", source="-") == {0: 1, 1: 0}


def test_format_transversal_accepts_dict_or_sequence():
    assert format_transversal({1: 0, 0: 1}) == "0 1\n1 0\n"
    assert format_transversal((1, 0)) == "0 1\n1 0\n"


@pytest.mark.parametrize(
    "text,message",
    [
        ("0 1\n0 2\n", "vertex 0 listed twice"),
        ("0 -1\n", "vertex and color must be nonnegative"),
        ("a b\n", "expected two integers, got 'a b'"),
        ("0\n", "expected 'vertex color', got '0'"),
    ],
)
def test_parse_transversal_errors(text, message):
    with pytest.raises(FormatError) as info:
        parse_transversal(text, source="t.txt")
    assert message in str(info.value)
    assert str(info.value).startswith("t.txt:")

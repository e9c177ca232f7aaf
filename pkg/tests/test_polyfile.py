import pytest
from hypothesis import given

from helpers import polyiamonds
from octafold.polyfile import PolyParseError, dump, dumps, load, loads

HEX = """# hexagon
T 0 0 U
T -1 0 U
T -1 0 D
T 0 -1 U
T 0 -1 D
T -1 -1 D
"""


def test_round_trip_preserves_shape():
    P = loads(HEX)
    assert P.size == 6 and not P.slits
    assert loads(dumps(P)) == P


@given(polyiamonds(1, 14, slits=True))
def test_round_trip_property(P):
    assert loads(dumps(P, "x")) == P


def test_slit_lines():
    P = loads(HEX + "S 0 0 U -1 0 D\n")
    assert len(P.slits) == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("T 0 0 U\nT 0 0 U\n", 2),
        ("T 0 0 Q\n", 1),
        ("T 0 x U\n", 1),
        ("X 1 2\n", 1),
        ("T 0 0 U\nS 0 0 U 5 5 D\n", 2),
        ("T 0 0 U\nT 0 0 D\nS 0 0 U 0 0 D\n", 3),
    ],
)
def test_parse_errors_report_the_line(text, line):
    with pytest.raises(PolyParseError) as exc:
        loads(text)
    assert exc.value.line == line


def test_empty_and_disconnected_input():
    with pytest.raises(PolyParseError):
        loads("# nothing\n")
    with pytest.raises(PolyParseError):
        loads("T 0 0 U\nT 5 5 U\n")


def test_file_helpers(tmp_path):
    P = loads(HEX)
    path = tmp_path / "h.poly"
    dump(P, path, "hex")
    assert load(path) == P
    assert path.read_text().startswith("# hex")

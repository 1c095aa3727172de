from fractions import Fraction

import pytest

from fstopo.algebra import GradeLattice
from fstopo.document import (
    DocumentError,
    document_from_topology,
    parse_document,
)
from fstopo.softsets import FuzzySoftSet
from fstopo.topology import validate_topology

SAMPLE = """\
# two desks under two lamps
universe: x y
parameters: e1 e2
lattice: 0 1/2 1

carrier:
  e1: x=1/2 y=1/2

open none:

open a:
  e1: x=1/2

open all:
  e1: x=1/2 y=1/2

set probe:
  e1: y=1/2
"""


def test_parse_sample():
    doc = parse_document(SAMPLE)
    assert list(doc.universe) == ["x", "y"]
    assert list(doc.parameters) == ["e1", "e2"]
    assert doc.lattice_spec == (0, Fraction(1, 2), 1)
    assert [name for name, _ in doc.opens] == ["none", "a", "all"]
    assert [name for name, _ in doc.extras] == ["probe"]
    assert doc.carrier.grade_of("e1", "x") == Fraction(1, 2)
    assert doc.carrier.grade_of("e2", "x") == 0


def test_names_and_named_set():
    doc = parse_document(SAMPLE)
    assert doc.names() == ("carrier", "none", "a", "all", "probe")
    assert doc.named_set("carrier") == doc.carrier
    assert doc.named_set("probe").grade_of("e1", "y") == Fraction(1, 2)
    with pytest.raises(KeyError):
        doc.named_set("zzz")


def test_missing_carrier_defaults_to_all_one():
    doc = parse_document("universe: x\nparameters: e1\nopen o:\n  e1: x=1\n")
    assert doc.carrier.is_full()


def test_empty_block_is_the_null_set():
    doc = parse_document(SAMPLE)
    assert doc.named_set("none").is_null()


def test_decimal_shorthand_renders_as_fraction():
    doc = parse_document(
        "universe: x\nparameters: e1\nopen o:\n  e1: x=0.5\n")
    assert doc.named_set("o").grade_of("e1", "x") == Fraction(1, 2)
    assert "x=1/2" in doc.render()
    assert "0.5" not in doc.render()


def test_render_round_trip():
    doc = parse_document(SAMPLE)
    again = parse_document(doc.render())
    assert again.carrier == doc.carrier
    assert again.opens == doc.opens
    assert again.extras == doc.extras
    assert again.render() == doc.render()


def test_occurring_grades_include_the_lattice_line():
    doc = parse_document(SAMPLE)
    assert Fraction(1, 2) in doc.occurring_grades()
    assert 0 in doc.occurring_grades() and 1 in doc.occurring_grades()


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("parameters: e1\nopen o:\n", "universe"),
        ("universe: x\nopen o:\n", "parameters"),
        ("universe: x\nuniverse: y\nparameters: e1\n", "line 2"),
        ("universe: x\nparameters: e1\nopen a:\nopen a:\n", "line 4"),
        ("universe: x\nparameters: e1\n  e1: x=1\n", "line 3"),
        ("universe: x\nparameters: e1\nopen o:\n  e9: x=1\n", "line 4"),
        ("universe: x\nparameters: e1\nopen o:\n  e1: z=1\n", "line 4"),
        ("universe: x\nparameters: e1\nopen o:\n  e1: x=3/2\n", "line 4"),
        ("universe: x\nparameters: e1\nopen o:\n  e1: x=1 x=0\n", "line 4"),
        ("universe: x\nparameters: e1\nwhatever: 1\n", "line 3"),
        ("universe: x\nparameters: e1\nopen carrier:\n", "reserved"),
    ],
)
def test_errors_carry_line_numbers(text, fragment):
    with pytest.raises(DocumentError) as err:
        parse_document(text)
    assert fragment in str(err.value)


def test_document_from_topology_round_trips():
    doc = parse_document(SAMPLE)
    space = validate_topology(doc.carrier, [s for _, s in doc.opens])
    emitted = document_from_topology(
        space.carrier, space.opens,
        lattice_spec=tuple(GradeLattice.close(["1/2"])))
    again = parse_document(emitted.render())
    assert again.carrier == space.carrier
    assert tuple(s for _, s in again.opens) == space.opens


def test_generated_names_are_sequential():
    doc = parse_document(SAMPLE)
    space = validate_topology(doc.carrier, [s for _, s in doc.opens])
    emitted = document_from_topology(space.carrier, space.opens)
    assert [name for name, _ in emitted.opens] == ["o1", "o2", "o3"]


def test_zero_rows_are_omitted_on_render():
    doc = parse_document(SAMPLE)
    rendered = doc.render()
    # e2 rows are all zero everywhere and never printed
    assert "e2:" not in rendered


def test_comments_and_blank_lines_ignored():
    text = "# hi\n\nuniverse: x\n# mid\nparameters: e1\n\nopen o:\n  e1: x=1\n"
    doc = parse_document(text)
    assert doc.named_set("o") == FuzzySoftSet.build(
        doc.universe, doc.parameters, {"e1": {"x": 1}})

from pathlib import Path

import pytest

from mha.catalog import build_sweedler_h4, by_name
from mha.errors import NonAssociative, NotCoassociative, SpecFileError
from mha.specfile import export_spec, load_spec, parse_spec_file

from conftest import ALL_NAMES

C2_FILE = """mha-spec v1
dim 2
basis e s
m 0 0 0 1
m 0 1 1 1
m 1 0 1 1
m 1 1 0 1
d 0 0 0 1
d 1 1 1 1
"""


def test_c2_file_parses():
    spec = parse_spec_file(C2_FILE)
    assert spec.dim == 2 and spec.labels == ("e", "s")
    alg, cm = spec.build()
    assert alg.unit == (1, 0)
    assert cm == by_name("Q[C2]").comult


def test_comments_blank_lines_and_zero_entries():
    text = "# a comment\n\nmha-spec v1   # header\ndim 1\nbasis u\nunit 1\nm 0 0 0 1\nd 0 0 0 2/2\nd 0 0 0 0\n"
    with pytest.raises(SpecFileError, match="duplicate"):
        parse_spec_file(text)
    alg, cm = load_spec(text.replace("d 0 0 0 0\n", ""))
    assert cm.of_basis(0) == (1,)


@pytest.mark.parametrize(
    "body, line, message",
    [
        ("dim 2\nbasis e s\nm 0 0 5 1\n", 4, "out of range"),
        ("dim 2\nbasis e s\nm 0 0 0 1.5\n", 4, "malformed"),
        ("dim 2\nbasis e s\nm 0 0 0 1/0\n", 4, "zero denominator"),
        ("dim 2\nbasis e\n", 3, "labels"),
        ("dim 2\nbasis e s\nx 1\n", 4, "unknown directive"),
        ("dim 2\nbasis e s\nm 0 0 1\n", 4, "fields"),
        ("dim 2\nbasis e s\nd 0 0 0 1\nd 0 0 0 1\n", 5, "duplicate"),
        ("basis e s\n", 2, "before dim"),
        ("dim two\n", 2, "integer"),
    ],
)
def test_errors_carry_the_line(body, line, message):
    with pytest.raises(SpecFileError, match=message) as info:
        parse_spec_file("mha-spec v1\n" + body)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_pieces():
    for text in ["", "mha-spec v2\n", "mha-spec v1\n", "mha-spec v1\ndim 1\n"]:
        with pytest.raises(SpecFileError):
            parse_spec_file(text)


def test_validation_errors_pass_through():
    bad_assoc = C2_FILE.replace("m 0 1 1 1\n", "")
    with pytest.raises(NonAssociative):
        load_spec(bad_assoc)
    bad_coassoc = C2_FILE + "d 1 1 0 1\n"
    with pytest.raises(NotCoassociative):
        load_spec(bad_coassoc)


def test_h4_round_trip_is_bit_identical():
    h4 = build_sweedler_h4()
    alg, cm = load_spec(export_spec(h4.algebra, h4.comult))
    assert alg == h4.algebra and cm == h4.comult
    assert cm.delta == h4.comult.delta and alg.constants == h4.algebra.constants


@pytest.mark.parametrize("name", ALL_NAMES)
def test_round_trip_on_catalog(name):
    entry = by_name(name)
    text = export_spec(entry.algebra, entry.comult, comment=name)
    alg, cm = load_spec(text)
    assert alg == entry.algebra and cm == entry.comult
    assert export_spec(alg, cm, comment=name) == text


SHIPPED = {"qc2": "Q[C2]", "qc3": "Q[C3]", "qs3": "Q[S3]", "fc2": "F(C2)", "fs3": "F(S3)", "h4": "H4", "monoid": "monoid"}


@pytest.mark.parametrize("stem", sorted(SHIPPED))
def test_shipped_spec_files_match_catalog(stem):
    entry = by_name(SHIPPED[stem])
    text = (Path(__file__).parent.parent / "specs" / f"{stem}.mha").read_text()
    assert text == export_spec(entry.algebra, entry.comult, comment=entry.name)

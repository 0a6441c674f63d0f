from fractions import Fraction

import pytest

from quiverext.docparse import (ParseError, build_document, parse_document,
                                parse_expr)
from quiverext.extensions import ExtensionPresentation


MINIMAL = """
field q

quiver K
  vertices 1
end
"""

TRIANGULAR_DOC = """
field q

quiver B
  vertices 1
end

quiver C
  vertices 1
end

bimodule M over C B dim 1
  left e1 = 1
  right e1 = 1
end

construct triangular T = b B c C module M

check extension T cap 6 pmax 4
"""


def test_empty_document_rejected():
    with pytest.raises(ParseError) as e:
        parse_document("")
    assert "no field block" in str(e.value)


def test_missing_field_block_rejected():
    with pytest.raises(ParseError):
        parse_document("quiver X\n  vertices 1\nend\n")


def test_undefined_reference():
    with pytest.raises(ParseError) as e:
        parse_document("field q\ncheck extension nowhere\n")
    assert "undefined reference" in str(e.value)


def test_duplicate_name():
    doc = "field q\nquiver A\n vertices 1\nend\nquiver A\n vertices 1\nend\n"
    with pytest.raises(ParseError):
        parse_document(doc)


def test_error_carries_line_and_column():
    with pytest.raises(ParseError) as e:
        parse_document("field q\nquiver A\n  vertices 1\n  bogus x\nend\n")
    assert e.value.line == 4
    assert e.value.col == 3


def test_expression_parsing():
    assert parse_expr(["0"], 1, 1) == []
    assert parse_expr(["g*g"], 1, 1) == [(Fraction(1), ("g", "g"))]
    terms = parse_expr(["a*b", "-", "2*c*d"], 1, 1)
    assert terms == [(Fraction(1), ("a", "b")), (Fraction(-2), ("c", "d"))]
    terms = parse_expr(["1/2*x"], 1, 1)
    assert terms == [(Fraction(1, 2), ("x",))]


def test_malformed_scalar():
    with pytest.raises(ParseError):
        parse_expr(["2/0*x"], 3, 7)


def test_scalar_normalization_in_matrix_rows():
    doc = """
field q

quiver K
  vertices 1
end

bimodule M over K K dim 1
  left e1 = 2/4
  right e1 = 1
end
"""
    parsed = parse_document(doc)
    block = parsed.blocks[1]
    assert block.left_rows[0][1][0][0] == Fraction(1, 2)


def test_build_minimal():
    built = build_document(parse_document(MINIMAL))
    assert built.env["K"].dim == 1


def test_build_triangular_document():
    built = build_document(parse_document(TRIANGULAR_DOC))
    ext = built.env["T"]
    assert isinstance(ext, ExtensionPresentation)
    assert ext.ambient.dim == 3
    assert built.checks[0].options == {"cap": "6", "pmax": "4"}


def test_round_trip_equivalence():
    doc = parse_document(TRIANGULAR_DOC)
    rendered = doc.render()
    doc2 = parse_document(rendered)
    built1 = build_document(doc)
    built2 = build_document(doc2)
    assert built1.env["B"].table == built2.env["B"].table
    assert built1.env["T"].ambient.table == built2.env["T"].ambient.table
    # rendering is a fixed point
    assert parse_document(doc2.render()).render() == rendered


def test_demo_document_round_trip():
    from quiverext.cli import demo_document
    text = demo_document()
    doc = parse_document(text)
    built = build_document(doc)
    assert built.env["Lambda"].dim == 9
    assert built.env["Gamma"].dim == 5
    doc2 = parse_document(doc.render())
    built2 = build_document(doc2)
    assert built2.env["Lambda"].table == built.env["Lambda"].table
    assert built2.env["GammaInLambda"].embedding == \
        built.env["GammaInLambda"].embedding


def test_field_override():
    built = build_document(parse_document(MINIMAL), field_override="p:3")
    assert built.env["K"].field.characteristic == 3

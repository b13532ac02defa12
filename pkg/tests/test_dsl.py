import random
from fractions import Fraction
from pathlib import Path

import pytest

from coalrel import RatMatrix, diagonal_relation, linearise, matrix_coalgebra, relation_from_kappa
from coalrel.catalog import order3_relation, path_coalgebra3
from coalrel.dsl import Declaration, Document, ParseError, emit, parse, tokenize
from helpers import FIXTURE_COALGEBRAS, random_relation, random_set_relation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

COALGEBRA_C = """coalgebra C {
  basis x y z
  delta x = x*x
  delta y = x*y + y*z
  delta z = z*z
  eps x = 1
  eps y = 0
  eps z = 1
}
"""


def error_of(source):
    with pytest.raises(ParseError) as info:
        parse(source)
    return info.value


def test_tokenize_positions():
    toks = tokenize("delta y = -1/2 x*y # note\n")
    assert [(t.kind, t.text) for t in toks][:6] == [
        ("word", "delta"), ("word", "y"), ("sym", "="), ("sym", "-"), ("word", "1"), ("sym", "/"),
    ]
    assert toks[0].line == 1 and toks[2].column == 9
    assert toks[-1].kind == "eof"


def test_tokenize_rejects_unicode_tensor():
    with pytest.raises(ParseError) as info:
        tokenize("x ⊗ y")
    assert (info.value.line, info.value.column) == (1, 3)


def test_parse_coalgebra_delta_matrix():
    c = parse(COALGEBRA_C)["C"]
    assert c == path_coalgebra3()
    assert c.delta.column_dict(1) == {1: 1, 5: 1}


def test_parse_span_relation():
    rel = parse(COALGEBRA_C + "relation R on C {\n  span x*x, z*z, x*y + y*z, y*x, z*x\n}\n")["R"]
    assert rel == order3_relation()


def test_parse_fixture_files():
    doc = parse((FIXTURES / "order3.crel").read_text())
    assert [d.kind for d in doc.declarations] == ["coalgebra", "relation"]
    assert doc["R"] == order3_relation()
    le3 = parse((FIXTURES / "le3.srel").read_text())["le3"]
    assert le3.pairs == (("1", "1"), ("1", "2"), ("1", "3"), ("2", "2"), ("2", "3"), ("3", "3"))
    diag = parse((FIXTURES / "diagonal.crel").read_text())
    assert diag["DP"] == diagonal_relation(path_coalgebra3())


def test_rational_coefficients_and_minus():
    src = "coalgebra D { basis a b\n delta a = a*a\n delta b = 1/2 a*b - -1/2 b*a + 0 a*a\n eps a = 1\n eps b = 0 }"
    c = parse(src)["D"]
    assert c.delta.column_dict(1) == {1: Fraction(1, 2), 2: Fraction(1, 2)}


def test_zero_literal():
    # parses, although the result is not a valid coalgebra
    assert parse("coalgebra Z { basis a\n delta a = 0\n eps a = 1 }")["Z"].delta.is_zero()


def test_empty_span():
    doc = parse("coalgebra Z { basis a\n delta a = a*a\n eps a = 1 }\nrelation E on Z { span }")
    assert doc["E"].dim == 0


def test_set_block_one_line():
    s = parse("set X { elements a b c ; pairs (a,b) (b,c) }")["X"]
    assert s.elements == ("a", "b", "c") and s.pairs == (("a", "b"), ("b", "c"))


def test_span_continues_after_comma():
    rel = parse(COALGEBRA_C + "relation R on C {\n  span x*x, z*z,\n    x*y + y*z, y*x, z*x\n}")["R"]
    assert rel.dim == 5


def test_named_span_basis():
    rel = parse(COALGEBRA_C + "relation R on C {\n basis a b\n span x*x, z*z\n}")["R"]
    assert rel.bicomodule.basis_names == ("a", "b")


# -- errors --------------------------------------------------------------------------


def test_trailing_plus_fails_at_end_of_line():
    err = error_of("coalgebra C {\n  basis x y z\n  delta y = x*y +\n}")
    assert err.line == 3
    assert err.column == len("  delta y = x*y +") + 1
    assert "end of line" in str(err)


def test_missing_delta_line():
    err = error_of(COALGEBRA_C.replace("  delta z = z*z\n", ""))
    assert "missing delta line for 'z'" in err.message
    assert err.line == 8


def test_missing_eps_line():
    err = error_of(COALGEBRA_C.replace("  eps y = 0\n", ""))
    assert "missing eps line for 'y'" in err.message


def test_unknown_basis_name():
    err = error_of(COALGEBRA_C.replace("delta z = z*z", "delta z = z*w"))
    assert "unknown" in err.message and err.line == 5


def test_relation_over_undeclared_coalgebra():
    err = error_of("relation R on C { span }")
    assert "not a previously declared coalgebra" in err.message


def test_span_not_a_sub_bicomodule():
    err = error_of(COALGEBRA_C + "relation R on C { span y*x }")
    assert "left coaction" in err.message


def test_duplicate_declaration():
    err = error_of("set X { elements a }\nset X { elements b }")
    assert "already declared" in err.message


def test_explicit_relation_missing_line():
    src = COALGEBRA_C + "relation D on C {\n basis x\n left x = x*x\n right x = x*x\n}"
    err = error_of(src)
    assert "missing embed line" in err.message


def test_bad_rational():
    err = error_of("coalgebra U { basis u\n delta u = u*u\n eps u = 1/0 }")
    assert err.expected == ("positive integer",)


def test_set_unknown_element():
    err = error_of("set X { elements a b ; pairs (a,c) }")
    assert "unknown element 'c'" in err.message


# -- round trip ----------------------------------------------------------------------


def roundtrip(doc):
    text = emit(doc)
    again = parse(text)
    assert again == doc
    assert emit(again) == text


@pytest.mark.parametrize("c", FIXTURE_COALGEBRAS, ids=lambda c: "".join(c.basis_names))
def test_roundtrip_coalgebras(c):
    roundtrip(Document([Declaration("coalgebra", "C", c), Declaration("relation", "D", diagonal_relation(c), over="C")]))


@pytest.mark.parametrize("seed", range(20))
def test_roundtrip_linearise(seed):
    s = random_set_relation(random.Random(seed))
    c, rel = linearise(s)
    roundtrip(Document([
        Declaration("set", "S", s),
        Declaration("coalgebra", "C", c),
        Declaration("relation", "R", rel, over="C"),
    ]))


@pytest.mark.parametrize("seed", range(20))
def test_roundtrip_random_relations(seed):
    rel = random_relation(random.Random(seed))
    doc = Document([Declaration("coalgebra", "C", rel.coalgebra), Declaration("relation", "R", rel, over="C")])
    roundtrip(doc)


def test_roundtrip_explicit_form():
    rel = order3_relation()
    # a non-injective r has no span form
    twisted = relation_from_kappa(rel.bicomodule, RatMatrix.from_rows([[1, 0, 0, "-1/3", 0]]))
    assert not twisted.is_injective
    doc = Document([Declaration("coalgebra", "C", rel.coalgebra), Declaration("relation", "T", twisted, over="C")])
    text = emit(doc)
    assert "embed r0 =" in text
    roundtrip(doc)


def test_emit_span_form_for_order3():
    doc = parse((FIXTURES / "order3.crel").read_text())
    assert "span x*x, z*z, x*y + y*z, y*x, z*x" in emit(doc)


def test_emit_matrix_coalgebra():
    text = emit(Document([Declaration("coalgebra", "M", matrix_coalgebra(2))]))
    assert "delta e01 = e00*e01 + e01*e11" in text
